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

#ifndef CTRLNET_ANALYSIS_HPP_
#define CTRLNET_ANALYSIS_HPP_

#include <cstdint>
#include <vector>

#include "ctrlnet/components.hpp"
#include "ctrlnet/graph.hpp"
#include "ctrlnet/input_graph.hpp"
#include "ctrlnet/matching.hpp"

namespace ctrlnet {

// Full pipeline result for one network and one maximum matching. Does not own
// the network; callers keep it alive alongside.
struct Analysis {
  Matching matching;
  InputNodeSet inputs;
  InputGraph input_graph;
  std::vector<NodeClass> classes;
  ComponentReport report;
  std::vector<std::size_t> component_of;  // node -> index into report.components

  std::size_t possible_input_count() const;
  double possible_input_fraction() const;
  const ControlComponent& component_containing(NodeId v) const {
    return report.components[component_of[v]];
  }
};

Analysis analyze(const DirectedNetwork& net, std::uint64_t matching_seed = 0);
Analysis analyze_with_matching(const DirectedNetwork& net, Matching m);

}  // namespace ctrlnet

#endif  // CTRLNET_ANALYSIS_HPP_
