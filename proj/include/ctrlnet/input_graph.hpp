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

#ifndef CTRLNET_INPUT_GRAPH_HPP_
#define CTRLNET_INPUT_GRAPH_HPP_

#include <span>
#include <vector>

#include "ctrlnet/graph.hpp"
#include "ctrlnet/matching.hpp"

namespace ctrlnet {

enum class Phase { kPossibleInput, kRedundant };

// `from` is control adjacent to `to` through `witness`: (witness, from) is an
// unmatched edge and (witness, to) the witness's matched out-edge. Read as
// "from can replace to in a minimum input set".
struct ControlAdjacencyEdge {
  NodeId from = 0;
  NodeId to = 0;
  NodeId witness = 0;
  Phase phase = Phase::kPossibleInput;

  friend bool operator==(const ControlAdjacencyEdge&,
                         const ControlAdjacencyEdge&) = default;
};

enum class ControlClass { kPossibleInput, kRedundant };

struct NodeClass {
  ControlClass kind = ControlClass::kRedundant;
  bool critical = false;  // in every minimum input set (zero in-degree)

  friend bool operator==(const NodeClass&, const NodeClass&) = default;
};

// Control-adjacency graph for one maximum matching. Only edges joining two
// possible-input nodes (E_Di) or two redundant nodes (E_Dr) are kept.
class InputGraph {
 public:
  std::size_t node_count() const { return possible_.size(); }
  const Matching& matching() const { return matching_; }

  std::span<const ControlAdjacencyEdge> possible_edges() const { return e_di_; }
  std::span<const ControlAdjacencyEdge> redundant_edges() const { return e_dr_; }
  std::size_t edge_count() const { return e_di_.size() + e_dr_.size(); }

  bool is_possible_input(NodeId v) const { return possible_[v] != 0; }
  bool is_critical(NodeId v) const { return critical_[v] != 0; }
  // V_PD in discovery order.
  std::span<const NodeId> possible_inputs() const { return discovery_; }

  // Successors of v along control-adjacency edges (may repeat a node when
  // two witnesses produce the same pair).
  std::span<const NodeId> successors(NodeId v) const {
    return {succ_.data() + succ_offsets_[v], succ_offsets_[v + 1] - succ_offsets_[v]};
  }
  std::span<const NodeId> predecessors(NodeId v) const {
    return {pred_.data() + pred_offsets_[v], pred_offsets_[v + 1] - pred_offsets_[v]};
  }

 private:
  friend InputGraph build_input_graph(const DirectedNetwork&, const Matching&);
  void index_adjacency();

  Matching matching_;
  std::vector<ControlAdjacencyEdge> e_di_;
  std::vector<ControlAdjacencyEdge> e_dr_;
  std::vector<char> possible_;
  std::vector<char> critical_;
  std::vector<NodeId> discovery_;
  std::vector<std::size_t> succ_offsets_;
  std::vector<NodeId> succ_;
  std::vector<std::size_t> pred_offsets_;
  std::vector<NodeId> pred_;
};

// Two-phase construction: a breadth-first closure from the input nodes over
// control adjacency yields E_Di and V_PD; every remaining (matched) node n
// then receives c -> n for each other out-neighbour c of its matched
// predecessor. Runs in O(N + L). Throws std::invalid_argument if `m` is not a
// maximum matching of `net`.
InputGraph build_input_graph(const DirectedNetwork& net, const Matching& m);

std::vector<NodeClass> classify_nodes(const InputGraph& ig);

// Forward closure of n over control-adjacency edges, n included. Sorted.
std::vector<NodeId> control_reachable_from(const InputGraph& ig, NodeId n);

}  // namespace ctrlnet

#endif  // CTRLNET_INPUT_GRAPH_HPP_
