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

#include "ctrlnet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ctrlnet {

DirectedNetwork::DirectedNetwork(std::vector<std::string> labels,
                                 std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second) {
      throw std::invalid_argument("duplicate node label '" + labels_[v] + "'");
    }
  }
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  duplicates_ = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  edges_ = std::move(edges);

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
    if (e.src == e.dst) ++self_loops_;
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // edges_ is sorted by (src, dst), so both adjacency lists come out sorted.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_targets_[i] = edges_[i].dst;
    in_sources_[in_fill[edges_[i].dst]++] = edges_[i].src;
  }
}

DirectedNetwork DirectedNetwork::with_nodes(std::size_t n,
                                            std::vector<Edge> edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return DirectedNetwork(std::move(labels), std::move(edges));
}

bool DirectedNetwork::has_edge(NodeId src, NodeId dst) const {
  const auto targets = out_neighbors(src);
  return std::binary_search(targets.begin(), targets.end(), dst);
}

std::optional<NodeId> DirectedNetwork::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DirectedNetwork DirectedNetwork::with_added_edges(
    std::span<const Edge> extra) const {
  std::vector<Edge> all(edges_.begin(), edges_.end());
  all.insert(all.end(), extra.begin(), extra.end());
  return DirectedNetwork(labels_, std::move(all));
}

bool same_network(const DirectedNetwork& a, const DirectedNetwork& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  std::vector<NodeId> map(a.node_count());
  for (NodeId v = 0; v < a.node_count(); ++v) {
    const auto w = b.find(a.label(v));
    if (!w) return false;
    map[v] = *w;
  }
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(map[e.src], map[e.dst])) return false;
  }
  return true;
}

namespace {

constexpr std::string_view kIsolatedTag = "# isolated:";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return s.substr(first, last - first + 1);
}

}  // namespace

DirectedNetwork load_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.starts_with(kIsolatedTag)) {
      const std::string_view label = trim(body.substr(kIsolatedTag.size()));
      if (label.empty()) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": isolated-node declaration without label");
      }
      intern(std::string(label));
      continue;
    }
    if (body.front() == '#' || body.front() == '%') continue;

    std::istringstream tokens{std::string(body)};
    std::string src, dst, extra;
    if (!(tokens >> src >> dst) || (tokens >> extra)) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": expected exactly two node labels");
    }
    const NodeId s = intern(src);
    const NodeId d = intern(dst);
    edges.push_back({s, d});
  }
  if (labels.empty()) throw ParseError(0, "empty edge list");
  return DirectedNetwork(std::move(labels), std::move(edges));
}

DirectedNetwork load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(const DirectedNetwork& net, std::ostream& out) {
  for (const Edge& e : net.edges()) {
    out << net.label(e.src) << '\t' << net.label(e.dst) << '\n';
  }
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (net.in_degree(v) == 0 && net.out_degree(v) == 0) {
      out << kIsolatedTag << ' ' << net.label(v) << '\n';
    }
  }
}

NetworkStats basic_stats(const DirectedNetwork& net) {
  if (net.node_count() == 0) {
    throw std::invalid_argument("network has no nodes");
  }
  NetworkStats s;
  s.nodes = net.node_count();
  s.edges = net.edge_count();
  s.avg_degree = 2.0 * static_cast<double>(s.edges) / static_cast<double>(s.nodes);
  s.self_loops = net.self_loop_count();
  return s;
}

}  // namespace ctrlnet
