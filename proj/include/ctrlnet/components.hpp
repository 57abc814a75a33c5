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

#ifndef CTRLNET_COMPONENTS_HPP_
#define CTRLNET_COMPONENTS_HPP_

#include <string_view>
#include <vector>

#include "ctrlnet/graph.hpp"
#include "ctrlnet/input_graph.hpp"
#include "ctrlnet/matching.hpp"

namespace ctrlnet {

enum class ComponentKind { kUnset, kIC, kUMC, kSMC };

// "I", "U", "S" (or "?" for kUnset).
std::string_view kind_letter(ComponentKind kind);
std::string_view kind_name(ComponentKind kind);

struct ControlComponent {
  std::size_t id = 0;
  std::vector<NodeId> members;  // sorted
  ComponentKind kind = ComponentKind::kUnset;

  std::size_t size() const { return members.size(); }
};

// Connected components of the undirected input graph, ordered (and numbered)
// by smallest member. Kinds are left unset.
std::vector<ControlComponent> find_components(const InputGraph& ig);

// IC when a member is an input node of m; otherwise UMC when some unsaturated
// node has an edge into a member, SMC when none does.
ControlComponent classify_kind(const DirectedNetwork& net, const Matching& m,
                               ControlComponent comp);

struct ComponentReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double avg_degree = 0.0;
  std::size_t mis_size = 0;
  double n_mis = 0.0;  // (N - |M|) / N
  std::vector<ControlComponent> components;
  std::size_t cc_max_id = 0;
  double cc_max_fraction = 0.0;
  ComponentKind cc_max_kind = ComponentKind::kUnset;
};

// Largest component; ties prefer IC, then UMC, then SMC, then smaller id.
std::size_t largest_component(const std::vector<ControlComponent>& comps);

ComponentReport component_report(const DirectedNetwork& net, const Matching& m,
                                 const InputGraph& ig);

}  // namespace ctrlnet

#endif  // CTRLNET_COMPONENTS_HPP_
