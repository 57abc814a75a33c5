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

#include "ctrlnet/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <string>

namespace ctrlnet {

Matching Matching::from_edges(const DirectedNetwork& net,
                              std::span<const Edge> edges) {
  Matching m(net.node_count());
  for (const Edge& e : edges) {
    if (e.src >= net.node_count() || e.dst >= net.node_count() ||
        !net.has_edge(e.src, e.dst)) {
      throw std::invalid_argument("matched pair is not an edge of the network");
    }
    m.add(e);
  }
  return m;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (NodeId u = 0; u < out_partner_.size(); ++u) {
    if (out_partner_[u] != kNone) out.push_back({u, out_partner_[u]});
  }
  return out;
}

void Matching::add(Edge e) {
  if (e.src >= node_count() || e.dst >= node_count()) {
    throw std::invalid_argument("matched pair out of range");
  }
  if (out_partner_[e.src] != kNone || in_partner_[e.dst] != kNone) {
    throw std::invalid_argument("node copy already matched");
  }
  out_partner_[e.src] = e.dst;
  in_partner_[e.dst] = e.src;
  ++size_;
}

void Matching::remove(Edge e) {
  if (!contains(e)) throw std::invalid_argument("edge is not matched");
  out_partner_[e.src] = kNone;
  in_partner_[e.dst] = kNone;
  --size_;
}

void Matching::resize(std::size_t node_count) {
  if (node_count < this->node_count()) {
    throw std::invalid_argument("matching cannot shrink");
  }
  in_partner_.resize(node_count, kNone);
  out_partner_.resize(node_count, kNone);
}

namespace {

constexpr NodeId kFree = std::numeric_limits<NodeId>::max();
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// In-copy adjacency (sources of in-edges) in CSR form, optionally shuffled.
struct ScanOrder {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> sources;
  std::vector<NodeId> roots;

  std::span<const NodeId> adj(NodeId v) const {
    return {sources.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

ScanOrder make_scan_order(const DirectedNetwork& net, std::uint64_t seed) {
  const std::size_t n = net.node_count();
  ScanOrder order;
  order.offsets.assign(n + 1, 0);
  order.sources.reserve(net.edge_count());
  for (NodeId v = 0; v < n; ++v) {
    const auto in = net.in_neighbors(v);
    order.sources.insert(order.sources.end(), in.begin(), in.end());
    order.offsets[v + 1] = order.sources.size();
  }
  order.roots.resize(n);
  std::iota(order.roots.begin(), order.roots.end(), NodeId{0});
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.roots.begin(), order.roots.end(), rng);
    for (NodeId v = 0; v < n; ++v) {
      std::shuffle(order.sources.begin() + order.offsets[v],
                   order.sources.begin() + order.offsets[v + 1], rng);
    }
  }
  return order;
}

}  // namespace

Matching maximum_matching(const DirectedNetwork& net, std::uint64_t order_seed) {
  const std::size_t n = net.node_count();
  const ScanOrder order = make_scan_order(net, order_seed);
  std::vector<NodeId> pair_in(n, kFree);   // in-copy -> out-copy
  std::vector<NodeId> pair_out(n, kFree);  // out-copy -> in-copy
  std::vector<std::uint32_t> dist(n, kInf);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<NodeId> queue;
  std::vector<NodeId> stack;
  queue.reserve(n);

  while (true) {
    // Layer the in-copies by alternating distance from the free ones.
    queue.clear();
    for (NodeId v : order.roots) {
      if (pair_in[v] == kFree) {
        dist[v] = 0;
        queue.push_back(v);
      } else {
        dist[v] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = queue[head];
      for (NodeId u : order.adj(v)) {
        const NodeId w = pair_out[u];
        if (w == kFree) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    if (!found) break;

    std::fill(cursor.begin(), cursor.end(), 0);
    for (NodeId root : order.roots) {
      if (pair_in[root] != kFree) continue;
      stack.assign(1, root);
      while (!stack.empty()) {
        const NodeId x = stack.back();
        const auto adj = order.adj(x);
        if (cursor[x] == adj.size()) {
          dist[x] = kInf;
          stack.pop_back();
          continue;
        }
        const NodeId u = adj[cursor[x]];
        const NodeId w = pair_out[u];
        if (w == kFree) {
          for (NodeId y : stack) {
            const NodeId uy = order.adj(y)[cursor[y]];
            pair_in[y] = uy;
            pair_out[uy] = y;
          }
          stack.clear();
        } else if (dist[w] != kInf && dist[w] == dist[x] + 1) {
          stack.push_back(w);
        } else {
          ++cursor[x];
        }
      }
    }
  }

  Matching m(n);
  for (NodeId v = 0; v < n; ++v) {
    if (pair_in[v] != kFree) m.add({pair_in[v], v});
  }
  return m;
}

InputNodeSet input_nodes(const DirectedNetwork& net, const Matching& m) {
  InputNodeSet set;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (!m.in_matched(v)) set.nodes.push_back(v);
  }
  set.perfectly_matched = set.nodes.empty();
  return set;
}

std::vector<NodeId> unsaturated_nodes(const DirectedNetwork& net,
                                      const Matching& m) {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < net.node_count(); ++u) {
    if (!m.out_matched(u)) out.push_back(u);
  }
  return out;
}

bool is_maximum(const DirectedNetwork& net, const Matching& m) {
  const std::size_t n = net.node_count();
  if (m.node_count() != n) {
    throw std::invalid_argument("matching size does not match network");
  }
  for (const Edge& e : m.edges()) {
    if (!net.has_edge(e.src, e.dst)) {
      throw std::invalid_argument("matched pair is not an edge of the network");
    }
  }
  std::vector<char> seen_in(n, 0);
  std::vector<char> seen_out(n, 0);
  std::deque<NodeId> queue;
  for (NodeId v = 0; v < n; ++v) {
    if (!m.in_matched(v)) {
      seen_in[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    const auto partner = m.matched_in(v);
    for (NodeId u : net.in_neighbors(v)) {
      if (partner && *partner == u) continue;
      if (seen_out[u]) continue;
      seen_out[u] = 1;
      const auto next = m.matched_out(u);
      if (!next) return false;
      if (!seen_in[*next]) {
        seen_in[*next] = 1;
        queue.push_back(*next);
      }
    }
  }
  return true;
}

ExchangeResult exchange(const DirectedNetwork& net, const Matching& m,
                        NodeId n, NodeId witness) {
  if (n >= net.node_count() || witness >= net.node_count()) {
    throw std::invalid_argument("node id out of range");
  }
  if (m.in_matched(n)) {
    throw std::invalid_argument("node '" + net.label(n) +
                                "' is not an input node of the matching");
  }
  if (!net.has_edge(witness, n)) {
    throw std::invalid_argument("no in-edge (" + net.label(witness) + ", " +
                                net.label(n) + ")");
  }
  const auto b = m.matched_out(witness);
  if (!b) {
    throw InvariantViolation("witness '" + net.label(witness) +
                             "' has no matched out-edge; matching is not maximum");
  }
  ExchangeResult result{m, *b};
  result.matching.remove({witness, *b});
  result.matching.add({witness, n});
  return result;
}

}  // namespace ctrlnet
