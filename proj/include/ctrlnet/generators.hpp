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

#ifndef CTRLNET_GENERATORS_HPP_
#define CTRLNET_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ctrlnet/graph.hpp"

namespace ctrlnet {

enum class Model { kER, kSF };

std::string_view model_name(Model model);
Model parse_model(std::string_view name);

struct GenSpec {
  Model model = Model::kER;
  std::size_t nodes = 0;
  double avg_degree = 0.0;  // target 2L/N
  double gamma_in = 3.0;    // SF only
  double gamma_out = 3.0;   // SF only
  std::uint64_t seed = 0;

  // round(avg_degree * nodes / 2)
  std::size_t edge_target() const;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniform integer in [0, bound), bound > 0. Rejection sampling on the raw
// engine output so results do not depend on the standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64& rng);

// Exactly edge_target() distinct directed edges, drawn uniformly without
// replacement from the N(N-1) non-loop pairs.
DirectedNetwork er_directed(const GenSpec& spec);

// Static model: node i has out-weight (i+1)^(-1/(gamma_out-1)) and in-weight
// (i+1)^(-1/(gamma_in-1)); edges are drawn as (out-weighted source,
// in-weighted target), rejecting self-loops and duplicates, until
// edge_target() edges exist.
DirectedNetwork scale_free_directed(const GenSpec& spec);

DirectedNetwork generate(const GenSpec& spec);

}  // namespace ctrlnet

#endif  // CTRLNET_GENERATORS_HPP_
