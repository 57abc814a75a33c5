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

#include "ctrlnet/components.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ctrlnet {

std::string_view kind_letter(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kIC: return "I";
    case ComponentKind::kUMC: return "U";
    case ComponentKind::kSMC: return "S";
    case ComponentKind::kUnset: break;
  }
  return "?";
}

std::string_view kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kIC: return "IC";
    case ComponentKind::kUMC: return "UMC";
    case ComponentKind::kSMC: return "SMC";
    case ComponentKind::kUnset: break;
  }
  return "unset";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }

  NodeId find(NodeId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<unsigned char> rank_;
};

int kind_priority(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kIC: return 0;
    case ComponentKind::kUMC: return 1;
    case ComponentKind::kSMC: return 2;
    case ComponentKind::kUnset: break;
  }
  return 3;
}

}  // namespace

std::vector<ControlComponent> find_components(const InputGraph& ig) {
  const std::size_t n = ig.node_count();
  DisjointSets sets(n);
  for (const auto& e : ig.possible_edges()) sets.unite(e.from, e.to);
  for (const auto& e : ig.redundant_edges()) sets.unite(e.from, e.to);

  // Visiting nodes in id order numbers components by smallest member.
  std::vector<std::size_t> slot(n, SIZE_MAX);
  std::vector<ControlComponent> comps;
  for (NodeId v = 0; v < n; ++v) {
    const NodeId root = sets.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = comps.size();
      comps.push_back({comps.size(), {}, ComponentKind::kUnset});
    }
    comps[slot[root]].members.push_back(v);
  }
  return comps;
}

ControlComponent classify_kind(const DirectedNetwork& net, const Matching& m,
                               ControlComponent comp) {
  const bool has_input = std::any_of(
      comp.members.begin(), comp.members.end(),
      [&](NodeId v) { return !m.in_matched(v); });
  if (has_input) {
    comp.kind = ComponentKind::kIC;
    return comp;
  }
  const bool linked = std::any_of(
      comp.members.begin(), comp.members.end(), [&](NodeId v) {
        const auto preds = net.in_neighbors(v);
        return std::any_of(preds.begin(), preds.end(),
                           [&](NodeId u) { return !m.out_matched(u); });
      });
  comp.kind = linked ? ComponentKind::kUMC : ComponentKind::kSMC;
  return comp;
}

std::size_t largest_component(const std::vector<ControlComponent>& comps) {
  if (comps.empty()) throw std::invalid_argument("no components");
  std::size_t best = 0;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    const auto& a = comps[i];
    const auto& b = comps[best];
    if (a.size() != b.size()) {
      if (a.size() > b.size()) best = i;
      continue;
    }
    const int pa = kind_priority(a.kind);
    const int pb = kind_priority(b.kind);
    if (pa != pb) {
      if (pa < pb) best = i;
      continue;
    }
    if (a.id < b.id) best = i;
  }
  return best;
}

ComponentReport component_report(const DirectedNetwork& net, const Matching& m,
                                 const InputGraph& ig) {
  const NetworkStats stats = basic_stats(net);
  ComponentReport r;
  r.nodes = stats.nodes;
  r.edges = stats.edges;
  r.avg_degree = stats.avg_degree;
  r.mis_size = net.node_count() - m.size();
  r.n_mis = static_cast<double>(r.mis_size) / static_cast<double>(r.nodes);
  r.components = find_components(ig);
  for (auto& comp : r.components) comp = classify_kind(net, m, std::move(comp));
  const std::size_t best = largest_component(r.components);
  r.cc_max_id = r.components[best].id;
  r.cc_max_fraction = static_cast<double>(r.components[best].size()) /
                      static_cast<double>(r.nodes);
  r.cc_max_kind = r.components[best].kind;
  return r;
}

}  // namespace ctrlnet
