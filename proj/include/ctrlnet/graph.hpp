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

#ifndef CTRLNET_GRAPH_HPP_
#define CTRLNET_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctrlnet {

// Dense node index in [0, N).
using NodeId = std::uint32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised for malformed edge-list input. `line()` is 1-based, 0 when the
// error is not tied to a line (e.g. empty input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Simple directed graph G(V, E) with CSR in/out adjacency. Immutable after
// construction; edges are kept sorted by (src, dst) and deduplicated.
class DirectedNetwork {
 public:
  DirectedNetwork() = default;

  // Builds a network over `labels.size()` nodes. Duplicate edges are dropped;
  // the number dropped is available through duplicates_collapsed().
  DirectedNetwork(std::vector<std::string> labels, std::vector<Edge> edges);

  // Nodes labelled "0".."n-1".
  static DirectedNetwork with_nodes(std::size_t n, std::vector<Edge> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t self_loop_count() const { return self_loops_; }
  std::size_t duplicates_collapsed() const { return duplicates_; }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }
  bool has_edge(NodeId src, NodeId dst) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  // Returns a new network with `extra` edges appended (same node set).
  DirectedNetwork with_added_edges(std::span<const Edge> extra) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_sources_;
  std::size_t self_loops_ = 0;
  std::size_t duplicates_ = 0;
};

// Same labels and same labelled edge set; dense ids may differ.
bool same_network(const DirectedNetwork& a, const DirectedNetwork& b);

// Reads whitespace-separated "src dst" pairs. Lines starting with '#' or '%'
// are comments, except "# isolated: <label>" which declares a node without
// edges (written by write_edge_list so that isolated nodes survive a round
// trip). Ids follow first appearance.
DirectedNetwork load_edge_list(std::istream& in);
DirectedNetwork load_edge_list_file(const std::string& path);

// One "src\tdst" line per edge, sorted by (src id, dst id), followed by
// "# isolated: <label>" lines for zero-degree nodes.
void write_edge_list(const DirectedNetwork& net, std::ostream& out);

struct NetworkStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double avg_degree = 0.0;  // 2L/N
  std::size_t self_loops = 0;
};

NetworkStats basic_stats(const DirectedNetwork& net);

// Bipartite split: every node v has an out-copy and an in-copy; each edge
// (u, v) joins out-copy u to in-copy v. Zero-degree copies stay isolated.
class BipartiteView {
 public:
  explicit BipartiteView(const DirectedNetwork& net) : net_(&net) {}

  std::size_t out_copy_count() const { return net_->node_count(); }
  std::size_t in_copy_count() const { return net_->node_count(); }
  std::size_t edge_count() const { return net_->edge_count(); }
  // In-copies adjacent to out-copy u.
  std::span<const NodeId> in_copies_of(NodeId u) const {
    return net_->out_neighbors(u);
  }
  // Out-copies adjacent to in-copy v.
  std::span<const NodeId> out_copies_of(NodeId v) const {
    return net_->in_neighbors(v);
  }

 private:
  const DirectedNetwork* net_;
};

}  // namespace ctrlnet

#endif  // CTRLNET_GRAPH_HPP_
