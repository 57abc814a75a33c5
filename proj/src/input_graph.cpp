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

#include "ctrlnet/input_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctrlnet {

void InputGraph::index_adjacency() {
  const std::size_t n = possible_.size();
  succ_offsets_.assign(n + 1, 0);
  pred_offsets_.assign(n + 1, 0);
  auto count = [&](const ControlAdjacencyEdge& e) {
    ++succ_offsets_[e.from + 1];
    ++pred_offsets_[e.to + 1];
  };
  std::for_each(e_di_.begin(), e_di_.end(), count);
  std::for_each(e_dr_.begin(), e_dr_.end(), count);
  for (std::size_t v = 0; v < n; ++v) {
    succ_offsets_[v + 1] += succ_offsets_[v];
    pred_offsets_[v + 1] += pred_offsets_[v];
  }
  succ_.resize(edge_count());
  pred_.resize(edge_count());
  std::vector<std::size_t> s_fill(succ_offsets_.begin(), succ_offsets_.end() - 1);
  std::vector<std::size_t> p_fill(pred_offsets_.begin(), pred_offsets_.end() - 1);
  auto place = [&](const ControlAdjacencyEdge& e) {
    succ_[s_fill[e.from]++] = e.to;
    pred_[p_fill[e.to]++] = e.from;
  };
  std::for_each(e_di_.begin(), e_di_.end(), place);
  std::for_each(e_dr_.begin(), e_dr_.end(), place);
}

InputGraph build_input_graph(const DirectedNetwork& net, const Matching& m) {
  if (!is_maximum(net, m)) {
    throw std::invalid_argument("input graph requires a maximum matching");
  }
  const std::size_t n = net.node_count();
  InputGraph ig;
  ig.matching_ = m;
  ig.possible_.assign(n, 0);
  ig.critical_.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) ig.critical_[v] = net.in_degree(v) == 0;

  // Phase 1: closure from the minimum input set.
  auto& queue = ig.discovery_;
  for (NodeId v = 0; v < n; ++v) {
    if (!m.in_matched(v)) {
      ig.possible_[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId c : net.in_neighbors(v)) {
      const auto b = m.matched_out(c);
      // (c, v) matched: b == v, no adjacency.
      if (!b || *b == v) continue;
      ig.e_di_.push_back({v, *b, c, Phase::kPossibleInput});
      if (!ig.possible_[*b]) {
        ig.possible_[*b] = 1;
        queue.push_back(*b);
      }
    }
  }

  // Phase 2: every node outside V_PD is matched; its matched predecessor
  // witnesses c -> v for each of its other out-neighbours c.
  for (NodeId v = 0; v < n; ++v) {
    if (ig.possible_[v]) continue;
    const auto witness = m.matched_in(v);
    if (!witness) {
      throw InvariantViolation("unmatched node outside the closure");
    }
    for (NodeId c : net.out_neighbors(*witness)) {
      if (c == v) continue;
      ig.e_dr_.push_back({c, v, *witness, Phase::kRedundant});
    }
  }

  ig.index_adjacency();
  return ig;
}

std::vector<NodeClass> classify_nodes(const InputGraph& ig) {
  std::vector<NodeClass> classes(ig.node_count());
  for (NodeId v = 0; v < ig.node_count(); ++v) {
    classes[v].kind = ig.is_possible_input(v) ? ControlClass::kPossibleInput
                                              : ControlClass::kRedundant;
    classes[v].critical = ig.is_critical(v);
  }
  return classes;
}

std::vector<NodeId> control_reachable_from(const InputGraph& ig, NodeId n) {
  if (n >= ig.node_count()) throw std::invalid_argument("node id out of range");
  std::vector<char> seen(ig.node_count(), 0);
  std::vector<NodeId> out{n};
  seen[n] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (NodeId w : ig.successors(out[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ctrlnet
