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

#include "ctrlnet/alteration.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "ctrlnet/input_graph.hpp"

namespace ctrlnet {

std::string_view reason_tag(AdditionReason reason) {
  switch (reason) {
    case AdditionReason::kSaturateInput: return "saturate_input";
    case AdditionReason::kSaturateUnsaturated: return "saturate_unsaturated";
    case AdditionReason::kAdjacencyLink: return "adjacency_link";
  }
  return "unknown";
}

namespace {

struct WorkState {
  DirectedNetwork net;
  Matching m;
};

ComponentKind current_kind(const DirectedNetwork& net, const Matching& m,
                           const ControlComponent& comp) {
  return classify_kind(net, m, comp).kind;
}

void require_kind(const DirectedNetwork& net, const Matching& m,
                  const ControlComponent& comp, ComponentKind want) {
  const ComponentKind have = current_kind(net, m, comp);
  if (have != want) {
    throw InfeasibleAlteration("component " + std::to_string(comp.id) + " is " +
                               std::string(kind_name(have)) + ", expected " +
                               std::string(kind_name(want)));
  }
}

// Pairs every node of `need` with a distinct node of `pool` (both in
// preference order) so that the resulting edge is neither a self-loop nor an
// existing edge. Greedy first choice, Kuhn-style repair on conflict.
std::vector<Edge> pair_up(const DirectedNetwork& net,
                          const std::vector<NodeId>& need,
                          const std::vector<NodeId>& pool, bool need_is_src) {
  auto feasible = [&](NodeId n, NodeId p) {
    if (n == p) return false;
    return need_is_src ? !net.has_edge(n, p) : !net.has_edge(p, n);
  };
  std::vector<std::size_t> owner(pool.size(), SIZE_MAX);
  std::vector<std::size_t> choice(need.size(), SIZE_MAX);
  std::size_t next_free = 0;

  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (visited[j] || !feasible(need[i], pool[j])) continue;
      visited[j] = 1;
      if (owner[j] == SIZE_MAX || augment(owner[j])) {
        owner[j] = i;
        choice[i] = j;
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < need.size(); ++i) {
    while (next_free < pool.size() && owner[next_free] != SIZE_MAX) ++next_free;
    bool placed = false;
    for (std::size_t j = next_free; j < pool.size(); ++j) {
      if (owner[j] == SIZE_MAX && feasible(need[i], pool[j])) {
        owner[j] = i;
        choice[i] = j;
        placed = true;
        break;
      }
    }
    if (!placed) {
      visited.assign(pool.size(), 0);
      if (!augment(i)) {
        throw InfeasibleAlteration("no feasible addition for node '" +
                                   net.label(need[i]) + "'");
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(need.size());
  for (std::size_t i = 0; i < need.size(); ++i) {
    const NodeId p = pool[choice[i]];
    edges.push_back(need_is_src ? Edge{need[i], p} : Edge{p, need[i]});
  }
  return edges;
}

void commit(WorkState& st, AlterationPlan& plan, const std::vector<Edge>& edges,
            AdditionReason reason) {
  for (const Edge& e : edges) {
    st.m.add(e);
    plan.additions.push_back({e.src, e.dst, reason});
  }
  st.net = st.net.with_added_edges(edges);
}

// Input nodes among `members` get an edge from an unsaturated node.
void saturate_inputs(WorkState& st, const std::vector<NodeId>& members,
                     AlterationPlan& plan) {
  std::vector<NodeId> need;
  for (NodeId v : members) {
    if (!st.m.in_matched(v)) need.push_back(v);
  }
  std::vector<NodeId> pool = unsaturated_nodes(st.net, st.m);
  // Sinks first: an unsaturated sink adds no control adjacency when matched.
  std::stable_sort(pool.begin(), pool.end(), [&](NodeId a, NodeId b) {
    return (st.net.out_degree(a) > 0) < (st.net.out_degree(b) > 0);
  });
  if (pool.size() < need.size()) {
    throw InvariantViolation("fewer unsaturated nodes than input nodes");
  }
  commit(st, plan, pair_up(st.net, need, pool, /*need_is_src=*/false),
         AdditionReason::kSaturateInput);
}

// Every unsaturated node with an edge into `members` gets an edge to an
// input node.
void saturate_linkers(WorkState& st, const std::vector<NodeId>& members,
                      AlterationPlan& plan) {
  std::set<NodeId> linkers;
  for (NodeId v : members) {
    for (NodeId u : st.net.in_neighbors(v)) {
      if (!st.m.out_matched(u)) linkers.insert(u);
    }
  }
  const std::vector<NodeId> need(linkers.begin(), linkers.end());
  const std::vector<NodeId> pool = input_nodes(st.net, st.m).nodes;
  if (pool.size() < need.size()) {
    std::vector<EdgeAddition> partial = plan.additions;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      partial.push_back({need[i], pool[i], AdditionReason::kSaturateUnsaturated});
    }
    throw InfeasibleAlteration(
        "insufficient input nodes: " + std::to_string(need.size()) +
            " unsaturated linkers, " + std::to_string(pool.size()) + " input nodes",
        std::move(partial));
  }
  commit(st, plan, pair_up(st.net, need, pool, /*need_is_src=*/true),
         AdditionReason::kSaturateUnsaturated);
}

// Repeats saturation until every former member sits in an SMC.
void settle_to_smc(WorkState& st, AlterationPlan& plan) {
  const std::size_t limit = st.net.node_count() + 1;
  for (std::size_t pass = 0; pass < limit; ++pass) {
    const InputGraph ig = build_input_graph(st.net, st.m);
    std::vector<ControlComponent> comps = find_components(ig);
    std::vector<std::size_t> comp_of(st.net.node_count());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (NodeId v : comps[i].members) comp_of[v] = i;
    }
    std::set<std::size_t> touched;
    for (NodeId v : plan.target_members) touched.insert(comp_of[v]);
    const ControlComponent* offender = nullptr;
    ComponentKind kind = ComponentKind::kSMC;
    for (std::size_t i : touched) {
      kind = current_kind(st.net, st.m, comps[i]);
      if (kind != ComponentKind::kSMC) {
        offender = &comps[i];
        break;
      }
    }
    if (offender == nullptr) return;
    ++plan.rounds;
    if (kind == ComponentKind::kIC) {
      saturate_inputs(st, offender->members, plan);
    } else {
      saturate_linkers(st, offender->members, plan);
    }
  }
  throw InvariantViolation("saturation did not settle");
}

// Reachability summary of one component: candidates are the lowest member of
// each source strongly connected component, the only nodes whose
// control-reachable set can be maximal or needed in a minimum cover.
struct ReachTable {
  std::vector<NodeId> members;
  std::vector<NodeId> candidates;
  std::vector<std::vector<std::uint64_t>> reach;  // bitsets over members
};

ReachTable reach_table(const InputGraph& ig, const ControlComponent& comp) {
  ReachTable t;
  t.members = comp.members;
  const std::size_t k = t.members.size();
  auto local = [&](NodeId v) {
    return static_cast<std::size_t>(
        std::lower_bound(t.members.begin(), t.members.end(), v) - t.members.begin());
  };
  std::vector<std::vector<std::size_t>> succ(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (NodeId w : ig.successors(t.members[i])) succ[i].push_back(local(w));
  }

  // Iterative Tarjan.
  constexpr std::size_t kUnvisited = SIZE_MAX;
  std::vector<std::size_t> index(k, kUnvisited), low(k, 0), scc(k, kUnvisited);
  std::vector<char> on_stack(k, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t counter = 0, scc_count = 0;
  for (std::size_t root = 0; root < k; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge == 0 && index[v] == kUnvisited) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (edge < succ[v].size()) {
        const std::size_t w = succ[v][edge++];
        if (index[w] == kUnvisited) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          scc[w] = scc_count;
        } while (w != v);
        ++scc_count;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }

  std::vector<char> has_entry(scc_count, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j : succ[i]) {
      if (scc[i] != scc[j]) has_entry[scc[j]] = 1;
    }
  }
  std::vector<char> taken(scc_count, 0);
  std::vector<std::size_t> cand_local;
  for (std::size_t i = 0; i < k; ++i) {
    if (!has_entry[scc[i]] && !taken[scc[i]]) {
      taken[scc[i]] = 1;
      cand_local.push_back(i);
    }
  }
  const std::size_t words = (k + 63) / 64;
  std::vector<std::size_t> queue;
  for (std::size_t c : cand_local) {
    std::vector<std::uint64_t> bits(words, 0);
    queue.assign(1, c);
    bits[c / 64] |= std::uint64_t{1} << (c % 64);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t w : succ[queue[head]]) {
        const std::uint64_t bit = std::uint64_t{1} << (w % 64);
        if (!(bits[w / 64] & bit)) {
          bits[w / 64] |= bit;
          queue.push_back(w);
        }
      }
    }
    t.candidates.push_back(t.members[c]);
    t.reach.push_back(std::move(bits));
  }
  return t;
}

std::size_t count_new(const std::vector<std::uint64_t>& bits,
                      const std::vector<std::uint64_t>& covered) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    n += static_cast<std::size_t>(__builtin_popcountll(bits[i] & ~covered[i]));
  }
  return n;
}

// Edge making an input node control adjacent to `target`.
EdgeAddition link_edge(const DirectedNetwork& net, const Matching& m,
                       const std::vector<NodeId>& inputs, NodeId target,
                       const std::vector<EdgeAddition>& planned) {
  const auto pred = m.matched_in(target);
  if (!pred) throw InvariantViolation("SMC member without matched in-edge");
  for (NodeId d : inputs) {
    if (d == *pred || net.has_edge(*pred, d)) continue;
    const EdgeAddition cand{*pred, d, AdditionReason::kAdjacencyLink};
    if (std::find(planned.begin(), planned.end(), cand) != planned.end()) continue;
    return cand;
  }
  throw InfeasibleAlteration("no feasible addition linking an input node to '" +
                                 net.label(target) + "'",
                             planned);
}

AlterationPlan smc_to_ic(const DirectedNetwork& net, const Matching& m,
                         const ControlComponent& comp, CoverMode mode) {
  require_kind(net, m, comp, ComponentKind::kSMC);
  const std::vector<NodeId> inputs = input_nodes(net, m).nodes;
  if (inputs.empty()) {
    throw InfeasibleAlteration("no input node available (perfectly matched network)");
  }
  const InputGraph ig = build_input_graph(net, m);
  const ReachTable table = reach_table(ig, comp);

  AlterationPlan plan;
  plan.target_component = comp.id;
  plan.from_kind = ComponentKind::kSMC;
  plan.to_kind = ComponentKind::kIC;
  plan.target_members = comp.members;

  std::vector<std::uint64_t> covered(table.reach.empty() ? 0 : table.reach[0].size(), 0);
  while (true) {
    std::size_t best = SIZE_MAX;
    std::size_t best_gain = 0;
    // Candidates are in increasing id order; strict > keeps the lowest id.
    for (std::size_t i = 0; i < table.candidates.size(); ++i) {
      const std::size_t gain = count_new(table.reach[i], covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == SIZE_MAX) break;
    plan.additions.push_back(
        link_edge(net, m, inputs, table.candidates[best], plan.additions));
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= table.reach[best][w];
    if (mode == CoverMode::kSingle) break;
  }
  for (std::size_t i = 0; i < table.members.size(); ++i) {
    if (covered[i / 64] & (std::uint64_t{1} << (i % 64))) {
      plan.expected_possible.push_back(table.members[i]);
    }
  }
  return plan;
}

}  // namespace

AlterationPlan ic_to_smc(const DirectedNetwork& net, const Matching& m,
                         const ControlComponent& comp) {
  require_kind(net, m, comp, ComponentKind::kIC);
  AlterationPlan plan;
  plan.target_component = comp.id;
  plan.from_kind = ComponentKind::kIC;
  plan.to_kind = ComponentKind::kSMC;
  plan.target_members = comp.members;
  WorkState st{net, m};
  plan.rounds = 1;
  saturate_inputs(st, comp.members, plan);
  settle_to_smc(st, plan);
  return plan;
}

AlterationPlan umc_to_smc(const DirectedNetwork& net, const Matching& m,
                          const ControlComponent& comp) {
  require_kind(net, m, comp, ComponentKind::kUMC);
  AlterationPlan plan;
  plan.target_component = comp.id;
  plan.from_kind = ComponentKind::kUMC;
  plan.to_kind = ComponentKind::kSMC;
  plan.target_members = comp.members;
  WorkState st{net, m};
  plan.rounds = 1;
  saturate_linkers(st, comp.members, plan);
  settle_to_smc(st, plan);
  return plan;
}

AlterationPlan smc_to_ic_single(const DirectedNetwork& net, const Matching& m,
                                const ControlComponent& comp) {
  return smc_to_ic(net, m, comp, CoverMode::kSingle);
}

AlterationPlan smc_to_ic_full(const DirectedNetwork& net, const Matching& m,
                              const ControlComponent& comp) {
  return smc_to_ic(net, m, comp, CoverMode::kFull);
}

AlterationPlan umc_to_ic(const DirectedNetwork& net, const Matching& m,
                         const ControlComponent& comp, CoverMode mode) {
  AlterationPlan plan = umc_to_smc(net, m, comp);
  plan.to_kind = ComponentKind::kIC;
  DirectedNetwork cur = apply_plan(net, plan);
  const Matching cur_m = extend_matching(m, plan);

  const InputGraph ig = build_input_graph(cur, cur_m);
  std::vector<ControlComponent> comps = find_components(ig);
  std::vector<std::size_t> hits(comps.size(), 0);
  std::vector<std::size_t> comp_of(cur.node_count());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (NodeId v : comps[i].members) comp_of[v] = i;
  }
  for (NodeId v : plan.target_members) ++hits[comp_of[v]];

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (hits[i] > 0) order.push_back(i);
  }
  if (mode == CoverMode::kSingle) {
    const auto best = std::max_element(order.begin(), order.end(),
                                       [&](std::size_t a, std::size_t b) {
                                         return hits[a] < hits[b];
                                       });
    order = {*best};
  }
  for (std::size_t i : order) {
    AlterationPlan link = smc_to_ic(cur, cur_m, comps[i], mode);
    plan.additions.insert(plan.additions.end(), link.additions.begin(),
                          link.additions.end());
    plan.expected_possible.insert(plan.expected_possible.end(),
                                  link.expected_possible.begin(),
                                  link.expected_possible.end());
    cur = apply_plan(cur, link);
  }
  std::sort(plan.expected_possible.begin(), plan.expected_possible.end());
  return plan;
}

DirectedNetwork apply_plan(const DirectedNetwork& net, const AlterationPlan& plan) {
  std::vector<Edge> extra;
  extra.reserve(plan.additions.size());
  for (const EdgeAddition& a : plan.additions) {
    if (a.src == a.dst) throw std::invalid_argument("plan adds a self-loop");
    if (net.has_edge(a.src, a.dst)) {
      throw std::invalid_argument("plan adds an existing edge");
    }
    extra.push_back(a.edge());
  }
  return net.with_added_edges(extra);
}

Matching extend_matching(const Matching& m, const AlterationPlan& plan) {
  Matching out = m;
  for (const EdgeAddition& a : plan.additions) {
    if (a.reason != AdditionReason::kAdjacencyLink) out.add(a.edge());
  }
  return out;
}

AlterationPlan alteration_report(const Analysis& before, const Analysis& after,
                                 AlterationPlan plan) {
  const std::size_t n = before.classes.size();
  if (after.classes.size() != n) {
    throw std::invalid_argument("analyses cover different node sets");
  }
  plan.changed_nodes = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (before.classes[v].kind != after.classes[v].kind) ++plan.changed_nodes;
  }
  plan.delta_nd = n == 0 ? 0.0 : static_cast<double>(plan.changed_nodes) / n;
  // Edgeless networks: ratio taken against a single edge.
  plan.p = static_cast<double>(plan.additions.size()) /
           static_cast<double>(std::max<std::size_t>(before.report.edges, 1));
  plan.mis_before = before.report.mis_size;
  plan.mis_after = after.report.mis_size;
  return plan;
}

bool attains_target(const Analysis& after, const AlterationPlan& plan) {
  if (plan.to_kind == ComponentKind::kIC) {
    if (plan.expected_possible.empty()) return false;
    return std::all_of(plan.expected_possible.begin(), plan.expected_possible.end(),
                       [&](NodeId v) {
                         return after.classes[v].kind == ControlClass::kPossibleInput;
                       });
  }
  return std::all_of(plan.target_members.begin(), plan.target_members.end(),
                     [&](NodeId v) {
                       return after.component_containing(v).kind == plan.to_kind;
                     });
}

}  // namespace ctrlnet
