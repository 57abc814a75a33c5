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

#include "ctrlnet/analysis.hpp"

#include <algorithm>

namespace ctrlnet {

std::size_t Analysis::possible_input_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const NodeClass& c) {
        return c.kind == ControlClass::kPossibleInput;
      }));
}

double Analysis::possible_input_fraction() const {
  if (classes.empty()) return 0.0;
  return static_cast<double>(possible_input_count()) /
         static_cast<double>(classes.size());
}

Analysis analyze(const DirectedNetwork& net, std::uint64_t matching_seed) {
  return analyze_with_matching(net, maximum_matching(net, matching_seed));
}

Analysis analyze_with_matching(const DirectedNetwork& net, Matching m) {
  Analysis a;
  a.input_graph = build_input_graph(net, m);
  a.inputs = input_nodes(net, m);
  a.classes = classify_nodes(a.input_graph);
  a.report = component_report(net, m, a.input_graph);
  a.component_of.assign(net.node_count(), 0);
  for (std::size_t i = 0; i < a.report.components.size(); ++i) {
    for (NodeId v : a.report.components[i].members) a.component_of[v] = i;
  }
  a.matching = std::move(m);
  return a;
}

}  // namespace ctrlnet
