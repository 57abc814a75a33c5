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

#ifndef CTRLNET_MATCHING_HPP_
#define CTRLNET_MATCHING_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ctrlnet/graph.hpp"

namespace ctrlnet {

// Signals that a structural guarantee of the theory was violated, which means
// an argument was not what its precondition claimed (e.g. a non-maximum
// matching).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A matching of the bipartite split. Edge (u, v) matched means out-copy u is
// paired with in-copy v.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t node_count)
      : in_partner_(node_count, kNone), out_partner_(node_count, kNone) {}

  // Validates that every edge is in `net` and no copy is used twice.
  static Matching from_edges(const DirectedNetwork& net,
                             std::span<const Edge> edges);

  std::size_t node_count() const { return in_partner_.size(); }
  std::size_t size() const { return size_; }

  // Out-copy matched to in-copy v, i.e. the source of v's matched in-edge.
  std::optional<NodeId> matched_in(NodeId v) const {
    return in_partner_[v] == kNone ? std::nullopt
                                   : std::optional<NodeId>(in_partner_[v]);
  }
  // In-copy matched to out-copy u, i.e. the target of u's matched out-edge.
  std::optional<NodeId> matched_out(NodeId u) const {
    return out_partner_[u] == kNone ? std::nullopt
                                    : std::optional<NodeId>(out_partner_[u]);
  }
  bool in_matched(NodeId v) const { return in_partner_[v] != kNone; }
  bool out_matched(NodeId u) const { return out_partner_[u] != kNone; }
  bool contains(Edge e) const {
    return e.dst < in_partner_.size() && in_partner_[e.dst] == e.src;
  }

  // Matched edges sorted by (src, dst).
  std::vector<Edge> edges() const;

  // Both endpoints must be free / the edge must be present.
  void add(Edge e);
  void remove(Edge e);

  // Grows the node range (new copies unmatched).
  void resize(std::size_t node_count);

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> in_partner_;
  std::vector<NodeId> out_partner_;
  std::size_t size_ = 0;
};

// Hopcroft-Karp over the bipartite split. Seed 0 scans nodes and adjacency in
// id order; any other seed permutes the scan order, which may yield a
// different maximum matching of the same size.
Matching maximum_matching(const DirectedNetwork& net, std::uint64_t order_seed = 0);

struct InputNodeSet {
  std::vector<NodeId> nodes;  // sorted
  bool perfectly_matched = false;
};

// Nodes whose in-copy is unmatched (the minimum input set for a maximum M).
InputNodeSet input_nodes(const DirectedNetwork& net, const Matching& m);

// Nodes whose out-copy is unmatched.
std::vector<NodeId> unsaturated_nodes(const DirectedNetwork& net,
                                      const Matching& m);

// Berge: true iff no M-augmenting path starts at an unmatched in-copy.
// Throws std::invalid_argument if `m` is not a matching of `net`.
bool is_maximum(const DirectedNetwork& net, const Matching& m);

struct ExchangeResult {
  Matching matching;
  NodeId replaced = 0;
};

// Swaps input node n with the node its in-edge (witness, n) is control
// adjacent to: M' = M - (witness, b) + (witness, n), returning b.
ExchangeResult exchange(const DirectedNetwork& net, const Matching& m,
                        NodeId n, NodeId witness);

}  // namespace ctrlnet

#endif  // CTRLNET_MATCHING_HPP_
