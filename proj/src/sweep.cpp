// Copyright 2026 The ctrlnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctrlnet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ctrlnet/analysis.hpp"
#include "ctrlnet/report.hpp"

namespace ctrlnet {

SweepRecord sweep_one(const GenSpec& spec) {
  const DirectedNetwork net = generate(spec);
  const Analysis a = analyze(net);
  SweepRecord r;
  r.model = spec.model;
  r.nodes = spec.nodes;
  r.avg_degree = spec.avg_degree;
  r.seed = spec.seed;
  r.cc_max_fraction = a.report.cc_max_fraction;
  r.cc_count = a.report.components.size();
  r.n_p = a.possible_input_fraction();
  r.cc_kind = a.report.cc_max_kind;
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  std::vector<GenSpec> specs;
  for (double k : config.degrees) {
    for (std::uint64_t seed : config.seeds) {
      specs.push_back({config.model, config.nodes, k, config.gamma_in,
                       config.gamma_out, seed});
    }
  }
  std::vector<SweepRecord> rows(specs.size());
  unsigned threads = config.threads != 0 ? config.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(specs.size(), 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        rows[i] = sweep_one(specs[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_header(std::ostream& out) {
  out << "model,N,k,seed,cc_max_frac,cc_count,n_p,cc_kind\n";
}

void write_sweep_row(const SweepRecord& row, std::ostream& out) {
  out << model_name(row.model) << ',' << row.nodes << ',' << format_ratio(row.avg_degree)
      << ',' << row.seed << ',' << format_ratio(row.cc_max_fraction) << ','
      << row.cc_count << ',' << format_ratio(row.n_p) << ','
      << kind_letter(row.cc_kind) << '\n';
}

}  // namespace ctrlnet
