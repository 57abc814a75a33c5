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

#ifndef CTRLNET_TESTS_TEST_SUPPORT_HPP_
#define CTRLNET_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ctrlnet/graph.hpp"
#include "ctrlnet/matching.hpp"

namespace ctrlnet::testing {

// Network from "src dst" label pairs, ids in first-appearance order.
inline DirectedNetwork net_of(
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::ostringstream text;
  for (const auto& [s, d] : pairs) text << s << ' ' << d << '\n';
  std::istringstream in(text.str());
  return load_edge_list(in);
}

inline NodeId id(const DirectedNetwork& net, const std::string& label) {
  return net.find(label).value();
}

inline std::set<std::string> labels(const DirectedNetwork& net,
                                    const std::vector<NodeId>& ids) {
  std::set<std::string> out;
  for (NodeId v : ids) out.insert(net.label(v));
  return out;
}

inline Matching matching_of(
    const DirectedNetwork& net,
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<Edge> edges;
  for (const auto& [s, d] : pairs) edges.push_back({id(net, s), id(net, d)});
  return Matching::from_edges(net, edges);
}

// G(n, p) digraph without self-loops; nodes "0".."n-1".
inline DirectedNetwork random_digraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v});
    }
  }
  return DirectedNetwork::with_nodes(n, std::move(edges));
}

// Naive ground truth used to check the oracle module itself: every subset of
// edges that is a matching, keeping those of maximum size. Only for networks
// with at most ~16 edges.
struct BruteForce {
  std::size_t matching_number = 0;
  std::vector<std::vector<Edge>> maximum_matchings;
  std::set<std::vector<NodeId>> mis_sets;
};

inline BruteForce brute_force(const DirectedNetwork& net) {
  const auto edges = net.edges();
  const std::size_t l = edges.size();
  BruteForce bf;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<char> out_used(net.node_count(), 0), in_used(net.node_count(), 0);
    std::vector<Edge> chosen;
    bool ok = true;
    for (std::size_t i = 0; i < l && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge e = edges[i];
      if (out_used[e.src] || in_used[e.dst]) ok = false;
      out_used[e.src] = in_used[e.dst] = 1;
      chosen.push_back(e);
    }
    if (!ok) continue;
    if (chosen.size() > bf.matching_number) {
      bf.matching_number = chosen.size();
      bf.maximum_matchings.clear();
    }
    if (chosen.size() == bf.matching_number) bf.maximum_matchings.push_back(chosen);
  }
  for (const auto& m : bf.maximum_matchings) {
    std::vector<char> in_used(net.node_count(), 0);
    for (const Edge& e : m) in_used[e.dst] = 1;
    std::vector<NodeId> mis;
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if (!in_used[v]) mis.push_back(v);
    }
    bf.mis_sets.insert(std::move(mis));
  }
  return bf;
}

// The hand-built worked networks.
inline std::vector<DirectedNetwork> worked_networks() {
  return {
      net_of({{"c", "a"}, {"c", "b"}}),
      net_of({{"1", "2"}, {"2", "3"}, {"3", "4"}}),
      net_of({{"1", "3"}, {"2", "3"}}),
      net_of({{"c1", "u"}, {"c1", "b"}, {"c1", "a"}, {"w", "a"}}),
      net_of({{"1", "2"}, {"2", "1"}}),
      net_of({{"c", "l1"}, {"c", "l2"}, {"c", "l3"}}),
  };
}

}  // namespace ctrlnet::testing

#endif  // CTRLNET_TESTS_TEST_SUPPORT_HPP_
