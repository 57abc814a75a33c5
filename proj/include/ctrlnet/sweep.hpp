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

#ifndef CTRLNET_SWEEP_HPP_
#define CTRLNET_SWEEP_HPP_

#include <cstdint>
#include <ostream>
#include <vector>

#include "ctrlnet/components.hpp"
#include "ctrlnet/generators.hpp"

namespace ctrlnet {

struct SweepRecord {
  Model model = Model::kER;
  std::size_t nodes = 0;
  double avg_degree = 0.0;
  std::uint64_t seed = 0;
  double cc_max_fraction = 0.0;
  std::size_t cc_count = 0;
  double n_p = 0.0;  // possible-input fraction
  ComponentKind cc_kind = ComponentKind::kUnset;
};

struct SweepConfig {
  Model model = Model::kER;
  std::size_t nodes = 0;
  std::vector<double> degrees;
  std::vector<std::uint64_t> seeds;
  double gamma_in = 3.0;
  double gamma_out = 3.0;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Rows ordered by (degree index, seed index) regardless of thread count.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

SweepRecord sweep_one(const GenSpec& spec);

void write_sweep_header(std::ostream& out);
void write_sweep_row(const SweepRecord& row, std::ostream& out);

}  // namespace ctrlnet

#endif  // CTRLNET_SWEEP_HPP_
