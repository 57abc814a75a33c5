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

#ifndef CTRLNET_ALTERATION_HPP_
#define CTRLNET_ALTERATION_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctrlnet/analysis.hpp"
#include "ctrlnet/components.hpp"
#include "ctrlnet/graph.hpp"
#include "ctrlnet/matching.hpp"

namespace ctrlnet {

enum class AdditionReason {
  kSaturateInput,        // unsaturated node -> input node of the target
  kSaturateUnsaturated,  // unsaturated linker -> input node elsewhere
  kAdjacencyLink,        // matched predecessor of a member -> input node
};

std::string_view reason_tag(AdditionReason reason);

struct EdgeAddition {
  NodeId src = 0;
  NodeId dst = 0;
  AdditionReason reason = AdditionReason::kSaturateInput;

  Edge edge() const { return {src, dst}; }
  friend bool operator==(const EdgeAddition&, const EdgeAddition&) = default;
};

// Any alteration that cannot be carried out: wrong component kind, no input
// node to link, not enough input nodes to saturate with. Carries the
// additions planned before the failure.
class InfeasibleAlteration : public std::runtime_error {
 public:
  explicit InfeasibleAlteration(const std::string& what,
                                std::vector<EdgeAddition> partial = {})
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const std::vector<EdgeAddition>& partial_plan() const { return partial_; }

 private:
  std::vector<EdgeAddition> partial_;
};

struct AlterationPlan {
  std::size_t target_component = 0;
  ComponentKind from_kind = ComponentKind::kUnset;
  ComponentKind to_kind = ComponentKind::kUnset;
  std::vector<NodeId> target_members;
  // For IC targets: members that become possible input nodes.
  std::vector<NodeId> expected_possible;
  std::vector<EdgeAddition> additions;
  // Saturation passes run; 1 when the first pass already reached the kind.
  std::size_t rounds = 0;

  // Filled by alteration_report.
  double p = 0.0;         // |additions| / L
  double delta_nd = 0.0;  // changed_nodes / N
  std::size_t changed_nodes = 0;
  std::size_t mis_before = 0;
  std::size_t mis_after = 0;
};

// Matches every input node of an IC with an edge from a distinct unsaturated
// node (sinks preferred, then lowest id). Further passes saturate whatever
// still keeps a former member out of an SMC.
AlterationPlan ic_to_smc(const DirectedNetwork& net, const Matching& m,
                         const ControlComponent& comp);

// Saturates every unsaturated node with an edge into a UMC (members included)
// with an edge to a distinct input node, lowest ids first.
AlterationPlan umc_to_smc(const DirectedNetwork& net, const Matching& m,
                          const ControlComponent& comp);

// One edge from the matched predecessor of the member with the largest
// control-reachable set to the lowest-id input node.
AlterationPlan smc_to_ic_single(const DirectedNetwork& net, const Matching& m,
                                const ControlComponent& comp);

// Greedy cover of the SMC by control-reachable sets, one link per pick.
AlterationPlan smc_to_ic_full(const DirectedNetwork& net, const Matching& m,
                              const ControlComponent& comp);

enum class CoverMode { kSingle, kFull };

// UMC -> SMC, then SMC -> IC on the resulting component(s).
AlterationPlan umc_to_ic(const DirectedNetwork& net, const Matching& m,
                         const ControlComponent& comp, CoverMode mode);

DirectedNetwork apply_plan(const DirectedNetwork& net, const AlterationPlan& plan);

// `m` plus the saturation edges of the plan; maximum in the altered network.
Matching extend_matching(const Matching& m, const AlterationPlan& plan);

// Fills p, delta_nd, changed_nodes and MIS sizes.
AlterationPlan alteration_report(const Analysis& before, const Analysis& after,
                                 AlterationPlan plan);

// Whether a re-analysis of the altered network shows the requested kind for
// the plan's target.
bool attains_target(const Analysis& after, const AlterationPlan& plan);

}  // namespace ctrlnet

#endif  // CTRLNET_ALTERATION_HPP_
