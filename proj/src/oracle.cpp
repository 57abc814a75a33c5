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

#include "ctrlnet/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ctrlnet/matching.hpp"

namespace ctrlnet {

namespace {

constexpr NodeId kNone = UINT32_MAX;

class Enumerator {
 public:
  Enumerator(const DirectedNetwork& net, const OracleGuard& guard)
      : net_(net), guard_(guard), n_(net.node_count()),
        used_out_(n_, 0), partner_(n_, kNone) {}

  std::size_t matching_number() {
    best_ = 0;
    search_max(0, 0);
    return best_;
  }

  void enumerate(std::size_t target, EnumerationResult& out) {
    target_ = target;
    out_ = &out;
    list(0, 0);
  }

 private:
  void search_max(std::size_t i, std::size_t matched) {
    if (matched + (n_ - i) <= best_) return;
    if (i == n_) {
      best_ = matched;
      return;
    }
    for (NodeId u : net_.in_neighbors(static_cast<NodeId>(i))) {
      if (used_out_[u]) continue;
      used_out_[u] = 1;
      search_max(i + 1, matched + 1);
      used_out_[u] = 0;
    }
    search_max(i + 1, matched);
  }

  void list(std::size_t i, std::size_t matched) {
    if (matched + (n_ - i) < target_) return;
    if (i == n_) {
      record();
      return;
    }
    const auto v = static_cast<NodeId>(i);
    for (NodeId u : net_.in_neighbors(v)) {
      if (used_out_[u]) continue;
      used_out_[u] = 1;
      partner_[v] = u;
      list(i + 1, matched + 1);
      partner_[v] = kNone;
      used_out_[u] = 0;
    }
    list(i + 1, matched);
  }

  void record() {
    if (++out_->matching_count > guard_.max_count) {
      throw OracleInfeasible("oracle infeasible: more than " +
                             std::to_string(guard_.max_count) +
                             " maximum matchings");
    }
    std::vector<NodeId> mis;
    for (NodeId v = 0; v < n_; ++v) {
      if (partner_[v] == kNone) mis.push_back(v);
    }
    mis_set_.insert(std::move(mis));
    if (guard_.keep_matchings) {
      std::vector<Edge> edges;
      for (NodeId v = 0; v < n_; ++v) {
        if (partner_[v] != kNone) edges.push_back({partner_[v], v});
      }
      std::sort(edges.begin(), edges.end());
      out_->matchings.push_back(std::move(edges));
    }
  }

 public:
  std::set<std::vector<NodeId>> mis_set_;

 private:
  const DirectedNetwork& net_;
  const OracleGuard& guard_;
  std::size_t n_;
  std::vector<char> used_out_;
  std::vector<NodeId> partner_;
  std::size_t best_ = 0;
  std::size_t target_ = 0;
  EnumerationResult* out_ = nullptr;
};

}  // namespace

EnumerationResult enumerate_maximum_matchings(const DirectedNetwork& net,
                                              const OracleGuard& guard) {
  if (net.node_count() > guard.max_nodes) {
    throw OracleInfeasible("oracle infeasible: " + std::to_string(net.node_count()) +
                           " nodes exceed the limit of " +
                           std::to_string(guard.max_nodes));
  }
  EnumerationResult out;
  Enumerator e(net, guard);
  out.matching_size = e.matching_number();
  e.enumerate(out.matching_size, out);
  out.mis_list.assign(e.mis_set_.begin(), e.mis_set_.end());

  const std::size_t n = net.node_count();
  out.in_some_mis.assign(n, 0);
  out.in_all_mis.assign(n, 0);
  std::vector<std::size_t> hits(n, 0);
  for (const auto& mis : out.mis_list) {
    for (NodeId v : mis) ++hits[v];
  }
  for (NodeId v = 0; v < n; ++v) {
    out.in_some_mis[v] = hits[v] > 0;
    out.in_all_mis[v] = hits[v] == out.mis_list.size() && !out.mis_list.empty();
  }
  return out;
}

std::vector<NodeClass> classify_exhaustive(const DirectedNetwork& net,
                                           const OracleGuard& guard) {
  const EnumerationResult r = enumerate_maximum_matchings(net, guard);
  std::vector<NodeClass> classes(net.node_count());
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if ((r.in_all_mis[v] != 0) != (net.in_degree(v) == 0)) {
      throw InvariantViolation("node '" + net.label(v) +
                               "': membership in every MIS disagrees with in-degree");
    }
    classes[v].kind = r.in_some_mis[v] ? ControlClass::kPossibleInput
                                       : ControlClass::kRedundant;
    classes[v].critical = r.in_all_mis[v] != 0;
  }
  return classes;
}

}  // namespace ctrlnet
