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

#include "ctrlnet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <vector>

namespace ctrlnet {

std::string_view model_name(Model model) {
  return model == Model::kER ? "ER" : "SF";
}

Model parse_model(std::string_view name) {
  if (name == "ER" || name == "er") return Model::kER;
  if (name == "SF" || name == "sf") return Model::kSF;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

std::size_t GenSpec::edge_target() const {
  return static_cast<std::size_t>(
      std::llround(avg_degree * static_cast<double>(nodes) / 2.0));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

void validate(const GenSpec& spec) {
  if (spec.nodes < 1) throw GenerationError("N must be at least 1");
  if (!(spec.avg_degree >= 0.0)) throw GenerationError("<k> must be non-negative");
  const std::uint64_t n = spec.nodes;
  if (spec.edge_target() > n * (n - 1)) {
    throw GenerationError("requested " + std::to_string(spec.edge_target()) +
                          " edges exceed N(N-1) = " + std::to_string(n * (n - 1)));
  }
}

std::vector<double> cumulative_weights(std::size_t n, double gamma) {
  const double alpha = 1.0 / (gamma - 1.0);
  std::vector<double> cum(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += std::pow(static_cast<double>(i + 1), -alpha);
    cum[i] = total;
  }
  return cum;
}

NodeId draw(std::mt19937_64& rng, const std::vector<double>& cum) {
  const double x = uniform_unit(rng) * cum.back();
  const auto it = std::upper_bound(cum.begin(), cum.end(), x);
  return static_cast<NodeId>(std::min<std::size_t>(it - cum.begin(), cum.size() - 1));
}

}  // namespace

DirectedNetwork er_directed(const GenSpec& spec) {
  validate(spec);
  const std::uint64_t n = spec.nodes;
  const std::uint64_t pairs = n * (n - 1);
  const std::uint64_t want = spec.edge_target();
  std::mt19937_64 rng(spec.seed);

  // Floyd's sampling of `want` distinct indices from [0, pairs).
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(want * 2);
  for (std::uint64_t j = pairs - want; j < pairs; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> picked(chosen.begin(), chosen.end());
  std::sort(picked.begin(), picked.end());
  std::vector<Edge> edges;
  edges.reserve(picked.size());
  for (std::uint64_t idx : picked) {
    const auto src = static_cast<NodeId>(idx / (n - 1));
    const auto r = static_cast<NodeId>(idx % (n - 1));
    edges.push_back({src, r < src ? r : r + 1});
  }
  return DirectedNetwork::with_nodes(spec.nodes, std::move(edges));
}

DirectedNetwork scale_free_directed(const GenSpec& spec) {
  validate(spec);
  if (!(spec.gamma_in > 2.0) || !(spec.gamma_out > 2.0)) {
    throw GenerationError("scale-free exponents must exceed 2");
  }
  const std::uint64_t n = spec.nodes;
  const std::uint64_t want = spec.edge_target();
  const std::vector<double> out_cum = cumulative_weights(spec.nodes, spec.gamma_out);
  const std::vector<double> in_cum = cumulative_weights(spec.nodes, spec.gamma_in);
  std::mt19937_64 rng(spec.seed);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(want * 2);
  std::vector<Edge> edges;
  edges.reserve(want);
  const std::uint64_t stall_limit = std::max<std::uint64_t>(n * want, 1);
  std::uint64_t misses = 0;
  while (edges.size() < want) {
    const NodeId src = draw(rng, out_cum);
    const NodeId dst = draw(rng, in_cum);
    if (src != dst && seen.insert(std::uint64_t{src} * n + dst).second) {
      edges.push_back({src, dst});
      misses = 0;
    } else if (++misses > stall_limit) {
      throw GenerationError("scale-free sampling stalled after " +
                            std::to_string(edges.size()) + " edges");
    }
  }
  return DirectedNetwork::with_nodes(spec.nodes, std::move(edges));
}

DirectedNetwork generate(const GenSpec& spec) {
  return spec.model == Model::kER ? er_directed(spec) : scale_free_directed(spec);
}

}  // namespace ctrlnet
