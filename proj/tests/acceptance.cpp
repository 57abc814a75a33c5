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

// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exit status is
// nonzero when any criterion fails.
//
//   acceptance_tests <path-to-ctrlnet-binary> [circuit-data-dir]
//
// The optional data directory (or CTRLNET_CIRCUIT_DATA) should contain
// s208a.txt, s420a.txt and s838a.txt edge lists.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "ctrlnet/alteration.hpp"
#include "ctrlnet/analysis.hpp"
#include "ctrlnet/generators.hpp"
#include "ctrlnet/oracle.hpp"
#include "ctrlnet/report.hpp"
#include "ctrlnet/sweep.hpp"
#include "test_support.hpp"

namespace ctrlnet {
namespace {

using Clock = std::chrono::steady_clock;

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict = Verdict::kFail;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------------------
// Structural invariants, accumulated over every network the suite analyzes.

struct InvariantTally {
  std::size_t networks = 0;
  std::size_t violations = 0;
  std::string first;

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
};

InvariantTally g_invariants;

void check_invariants(const DirectedNetwork& net) {
  auto& t = g_invariants;
  ++t.networks;
  const Analysis a = analyze(net, 0);
  const InputGraph& ig = a.input_graph;
  for (const auto& e : ig.possible_edges()) {
    if (!ig.is_possible_input(e.from) || !ig.is_possible_input(e.to)) {
      t.fail("possible-input edge leaves the class");
    }
  }
  for (const auto& e : ig.redundant_edges()) {
    if (ig.is_possible_input(e.from) || ig.is_possible_input(e.to)) {
      t.fail("redundant edge leaves the class");
    }
  }
  if (ig.edge_count() > net.edge_count()) t.fail("|E_D| > L");
  std::size_t total = 0;
  for (const auto& c : a.report.components) {
    total += c.size();
    if (c.kind != ComponentKind::kIC) continue;
    for (NodeId v : c.members) {
      for (NodeId u : net.in_neighbors(v)) {
        if (!a.matching.out_matched(u)) t.fail("input component linked by unsaturated node");
      }
    }
  }
  if (total != net.node_count()) t.fail("component sizes do not sum to N");
  for (std::uint64_t seed = 1; seed < 5; ++seed) {
    if (analyze(net, seed).classes != a.classes) {
      t.fail("classification differs for matching seed " + std::to_string(seed));
    }
  }
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  const auto t0 = Clock::now();
  const auto net = testing::net_of({{"c", "a"}, {"c", "b"}});
  check_invariants(net);
  const Analysis a = analyze(net);
  const auto r = enumerate_maximum_matchings(net);
  std::set<std::set<std::string>> mis;
  for (const auto& m : r.mis_list) mis.insert(testing::labels(net, m));
  const auto id = [&](const char* l) { return testing::id(net, l); };
  std::set<std::set<std::string>> comps;
  bool all_ic = true;
  for (const auto& c : a.report.components) {
    comps.insert(testing::labels(net, c.members));
    all_ic = all_ic && c.kind == ComponentKind::kIC;
  }
  bool ok = a.inputs.nodes.size() == 2 && r.matching_size == 1;
  ok = ok && mis == std::set<std::set<std::string>>{{"a", "c"}, {"b", "c"}};
  for (const char* v : {"a", "b", "c"}) {
    ok = ok && a.classes[id(v)].kind == ControlClass::kPossibleInput;
  }
  ok = ok && a.classes[id("c")].critical && !a.classes[id("a")].critical &&
       !a.classes[id("b")].critical;
  ok = ok && comps == std::set<std::set<std::string>>{{"a", "b"}, {"c"}} && all_ic;
  ok = ok && format_percent(a.report.n_mis) == "66.67" &&
       format_percent(a.report.cc_max_fraction) == "66.67" &&
       a.report.cc_max_kind == ComponentKind::kIC;
  const double secs = seconds_since(t0);
  ok = ok && secs < 1.0;
  return {ok ? Verdict::kPass : Verdict::kFail,
          "|MIS|=" + std::to_string(a.inputs.nodes.size()) + ", " +
              std::to_string(mis.size()) + " MISs, " + std::to_string(comps.size()) +
              " components, " + fmt(secs, 3) + " s"};
}

Outcome criterion2() {
  const auto t0 = Clock::now();
  std::vector<DirectedNetwork> corpus = testing::worked_networks();
  std::mt19937_64 rng(20240601);
  const std::array<double, 5> probs{0.1, 0.2, 0.3, 0.4, 0.5};
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 3 + uniform_below(rng, 6);
    corpus.push_back(testing::random_digraph(n, probs[i % 5], rng()));
  }
  std::size_t nodes = 0, mismatched = 0, vpd_mismatch = 0;
  for (const auto& net : corpus) {
    check_invariants(net);
    const Analysis a = analyze(net);
    const auto exhaustive = classify_exhaustive(net);
    const auto r = enumerate_maximum_matchings(net);
    for (NodeId v = 0; v < net.node_count(); ++v) {
      ++nodes;
      if (a.classes[v] != exhaustive[v]) ++mismatched;
      if (a.input_graph.is_possible_input(v) != (r.in_some_mis[v] != 0)) ++vpd_mismatch;
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = mismatched == 0 && vpd_mismatch == 0 && secs < 60.0;
  return {ok ? Verdict::kPass : Verdict::kFail,
          std::to_string(corpus.size()) + " networks, " + std::to_string(nodes) +
              " nodes, " + std::to_string(mismatched) + " class mismatches, " +
              std::to_string(vpd_mismatch) + " V_PD mismatches, " + fmt(secs, 3) + " s"};
}

Outcome criterion3() {
  std::size_t exchanges = 0, violations = 0, nets = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto net = er_directed({Model::kER, 50, 4.0, 3, 3, seed});
    check_invariants(net);
    ++nets;
    const Matching m = maximum_matching(net);
    const auto d = input_nodes(net, m).nodes;
    const std::set<NodeId> mis(d.begin(), d.end());
    for (NodeId n : d) {
      if (net.in_degree(n) == 0) continue;
      std::set<NodeId> partners;
      for (NodeId c : net.in_neighbors(n)) {
        ++exchanges;
        const auto r = exchange(net, m, n, c);
        partners.insert(r.replaced);
        if (!is_maximum(net, r.matching)) ++violations;
        auto expected = mis;
        expected.erase(n);
        expected.insert(r.replaced);
        const auto got = input_nodes(net, r.matching).nodes;
        if (r.replaced == n || mis.count(r.replaced) ||
            std::set<NodeId>(got.begin(), got.end()) != expected) {
          ++violations;
        }
      }
      if (partners.size() != net.in_degree(n)) ++violations;
    }
  }
  return {violations == 0 ? Verdict::kPass : Verdict::kFail,
          std::to_string(nets) + " networks, " + std::to_string(exchanges) +
              " exchanges, " + std::to_string(violations) + " violations"};
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = (i + j) / 2.0;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = (n - 1) / 2.0;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - mx);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - mx) * (ry[i] - mx);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count) {
  std::vector<std::uint64_t> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = first + i;
  return s;
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  const std::vector<double> degrees{2, 4, 6, 8, 10, 12};
  bool ok = true;
  std::string detail;
  for (Model model : {Model::kER, Model::kSF}) {
    SweepConfig cfg;
    cfg.model = model;
    cfg.nodes = 2000;
    cfg.degrees = degrees;
    cfg.seeds = seed_range(1, 10);
    const auto rows = run_sweep(cfg);
    for (double k : degrees) {
      for (std::uint64_t s : cfg.seeds) check_invariants(generate({model, 2000, k, 3, 3, s}));
    }
    std::vector<double> frac(degrees.size(), 0.0), count(degrees.size(), 0.0);
    for (const auto& r : rows) {
      const auto i = static_cast<std::size_t>(
          std::find(degrees.begin(), degrees.end(), r.avg_degree) - degrees.begin());
      frac[i] += r.cc_max_fraction / 10.0;
      count[i] += static_cast<double>(r.cc_count) / 10.0;
    }
    bool up = true, down = true;
    for (std::size_t i = 1; i < degrees.size(); ++i) {
      up = up && frac[i] > frac[i - 1];
      down = down && count[i] < count[i - 1];
    }
    const double rho = spearman(degrees, frac);
    const bool model_ok = up && down && rho >= 0.9 && frac.back() >= 0.8;
    ok = ok && model_ok;
    detail += std::string(model_name(model)) + ": rho=" + fmt(rho, 3) +
              " CCmax/N@12=" + fmt(frac.back(), 3) + (up ? "" : " not-increasing") +
              (down ? "" : " count-not-decreasing") + "; ";
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 300.0;
  return {ok ? Verdict::kPass : Verdict::kFail, detail + fmt(secs, 3) + " s"};
}

Outcome criterion6() {
  bool ok = true;
  std::string detail;
  std::size_t pooled = 0, pooled_total = 0;
  for (Model model : {Model::kER, Model::kSF}) {
    SweepConfig cfg;
    cfg.model = model;
    cfg.nodes = 2000;
    cfg.degrees = {10};
    cfg.seeds = seed_range(1, 20);
    const auto rows = run_sweep(cfg);
    for (std::uint64_t s : cfg.seeds) check_invariants(generate({model, 2000, 10, 3, 3, s}));
    std::size_t polar = 0;
    double lo = 1.0, hi = 0.0;
    for (const auto& r : rows) {
      if (r.n_p <= 0.25 || r.n_p >= 0.75) {
        ++polar;
      } else {
        lo = std::min(lo, r.n_p);
        hi = std::max(hi, r.n_p);
      }
    }
    pooled += polar;
    pooled_total += rows.size();
    const double share = static_cast<double>(polar) / static_cast<double>(rows.size());
    ok = ok && share >= 0.9;
    detail += std::string(model_name(model)) + ": " + std::to_string(polar) + "/" +
              std::to_string(rows.size()) + " polarized";
    if (polar < rows.size()) detail += " (middle n_p " + fmt(lo, 3) + ".." + fmt(hi, 3) + ")";
    detail += "; ";
  }
  detail += "pooled " + std::to_string(pooled) + "/" + std::to_string(pooled_total);
  return {ok ? Verdict::kPass : Verdict::kFail, detail};
}

std::optional<ControlComponent> largest_of(const Analysis& a, ComponentKind kind) {
  std::optional<ControlComponent> best;
  for (const auto& c : a.report.components) {
    if (c.kind == kind && (!best || c.size() > best->size())) best = c;
  }
  return best;
}

struct PlanCheck {
  bool attained = false;
  AlterationPlan plan;
  DirectedNetwork altered;
  Matching matching;
};

PlanCheck run_plan(const DirectedNetwork& net, const Analysis& before,
                   const AlterationPlan& plan) {
  PlanCheck out{false, plan, apply_plan(net, plan), extend_matching(before.matching, plan)};
  if (!is_maximum(out.altered, out.matching)) return out;
  const Analysis after = analyze_with_matching(out.altered, out.matching);
  out.attained = attains_target(after, plan);
  out.plan = alteration_report(before, after, plan);
  return out;
}

Outcome criterion7() {
  const std::vector<double> degrees{4, 8, 12};
  std::size_t plans = 0, missed = 0, infeasible = 0, mis_not_down = 0;
  std::vector<double> p_ic(degrees.size(), 0.0), p_umc(degrees.size(), 0.0);
  std::vector<std::size_t> n_ic(degrees.size(), 0), n_umc(degrees.size(), 0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto net = generate({Model::kSF, 2000, degrees[i], 3, 3, seed});
      const Analysis a = analyze(net);
      auto attempt = [&](const std::function<AlterationPlan()>& make) -> std::optional<PlanCheck> {
        ++plans;
        try {
          auto r = run_plan(net, a, make());
          if (!r.attained) ++missed;
          return r;
        } catch (const InfeasibleAlteration&) {
          ++infeasible;
          return std::nullopt;
        }
      };
      if (auto ic = largest_of(a, ComponentKind::kIC)) {
        if (auto r = attempt([&] { return ic_to_smc(net, a.matching, *ic); })) {
          p_ic[i] += r->plan.p;
          ++n_ic[i];
          if (r->plan.mis_after >= r->plan.mis_before) ++mis_not_down;
        }
      }
      if (auto umc = largest_of(a, ComponentKind::kUMC)) {
        if (auto r = attempt([&] { return umc_to_smc(net, a.matching, *umc); })) {
          p_umc[i] += r->plan.p;
          ++n_umc[i];
          if (r->plan.mis_after >= r->plan.mis_before) ++mis_not_down;
        }
        attempt([&] { return umc_to_ic(net, a.matching, *umc, CoverMode::kFull); });
      }
      if (auto smc = largest_of(a, ComponentKind::kSMC)) {
        attempt([&] { return smc_to_ic_single(net, a.matching, *smc); });
        attempt([&] { return smc_to_ic_full(net, a.matching, *smc); });
      }
    }
  }
  bool monotone = true;
  std::string means;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (n_ic[i]) p_ic[i] /= static_cast<double>(n_ic[i]);
    if (n_umc[i]) p_umc[i] /= static_cast<double>(n_umc[i]);
    if (i > 0) {
      if (n_ic[i] && n_ic[i - 1]) monotone = monotone && p_ic[i] <= p_ic[i - 1];
      if (n_umc[i] && n_umc[i - 1]) monotone = monotone && p_umc[i] <= p_umc[i - 1];
    }
    means += " k=" + fmt(degrees[i], 3) + ":" + fmt(p_ic[i], 3) + "/" + fmt(p_umc[i], 3);
  }
  const bool coverage = std::all_of(n_ic.begin(), n_ic.end(), [](auto n) { return n > 0; }) &&
                        std::all_of(n_umc.begin(), n_umc.end(), [](auto n) { return n > 0; });

  // (d): first seed whose k=10 network has a giant input component.
  double flip_ic = 0.0, flip_smc = 0.0;
  bool found = false;
  for (std::uint64_t seed = 1; seed <= 50 && !found; ++seed) {
    const auto net = generate({Model::kSF, 2000, 10, 3, 3, seed});
    const Analysis a = analyze(net);
    const auto giant = a.report.components[a.report.cc_max_id];
    if (giant.kind != ComponentKind::kIC || giant.size() * 2 < net.node_count()) continue;
    found = true;
    try {
      const auto first = run_plan(net, a, ic_to_smc(net, a.matching, giant));
      flip_ic = first.plan.delta_nd;
      const Analysis mid = analyze_with_matching(first.altered, first.matching);
      std::optional<ControlComponent> target;
      for (NodeId v : giant.members) {
        const auto& c = mid.component_containing(v);
        if (c.kind == ComponentKind::kSMC && (!target || c.size() > target->size())) target = c;
      }
      if (target) {
        const auto second = run_plan(first.altered, mid,
                                     smc_to_ic_single(first.altered, mid.matching, *target));
        flip_smc = second.plan.delta_nd;
        if (!second.attained) ++missed;
      }
    } catch (const InfeasibleAlteration&) {
      ++infeasible;
    }
  }

  const bool a_ok = missed == 0 && infeasible == 0;
  const bool d_ok = found && flip_ic >= 0.5 && flip_smc >= 0.5;
  const bool ok = a_ok && monotone && coverage && mis_not_down == 0 && d_ok;
  return {ok ? Verdict::kPass : Verdict::kFail,
          "(a) " + std::to_string(plans - missed - infeasible) + "/" + std::to_string(plans) +
              " plans attained; (b) mean p IC/UMC" + means + (monotone ? "" : " NOT monotone") +
              (coverage ? "" : " missing kinds") + "; (c) " + std::to_string(mis_not_down) +
              " MIS non-decreases; (d) flips " + fmt(flip_ic, 3) + " then " +
              fmt(flip_smc, 3) + (found ? "" : " (no giant IC found)")};
}

std::size_t min_cover(const std::vector<std::vector<NodeId>>& sets, std::size_t universe_size,
                      const std::map<NodeId, std::size_t>& index) {
  std::vector<std::uint32_t> masks;
  for (const auto& s : sets) {
    std::uint32_t m = 0;
    for (NodeId v : s) {
      const auto it = index.find(v);
      if (it != index.end()) m |= 1u << it->second;
    }
    masks.push_back(m);
  }
  const std::uint32_t full = (1u << universe_size) - 1;
  std::size_t best = sets.size();
  for (std::uint32_t pick = 1; pick < (1u << sets.size()); ++pick) {
    const auto size = static_cast<std::size_t>(std::popcount(pick));
    if (size >= best) continue;
    std::uint32_t got = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (pick >> i & 1) got |= masks[i];
    }
    if (got == full) best = size;
  }
  return best;
}

Outcome criterion8() {
  std::size_t checked = 0, multi = 0, wrong = 0;
  for (Model model : {Model::kER, Model::kSF}) {
    for (double k : {1.5, 2.0, 3.0, 4.0, 6.0}) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto net = generate({model, 300, k, 3, 3, seed});
        const Analysis a = analyze(net);
        for (const auto& c : a.report.components) {
          if (c.kind != ComponentKind::kSMC || c.size() > 10) continue;
          std::map<NodeId, std::size_t> index;
          for (NodeId v : c.members) index.emplace(v, index.size());
          std::vector<std::vector<NodeId>> sets;
          for (NodeId v : c.members) sets.push_back(control_reachable_from(a.input_graph, v));
          const auto plan = smc_to_ic_full(net, a.matching, c);
          ++checked;
          if (c.size() > 1) ++multi;
          if (plan.additions.size() != min_cover(sets, c.size(), index)) ++wrong;
        }
      }
    }
  }
  const bool ok = checked > 0 && wrong == 0;
  return {ok ? Verdict::kPass : Verdict::kFail,
          std::to_string(checked) + " SMCs (" + std::to_string(multi) +
              " with 2+ members), " + std::to_string(wrong) + " not minimum"};
}

Outcome criterion9(const std::filesystem::path& dir) {
  struct Row {
    const char* name;
    const char* n_mis;
    const char* cc_max;
  };
  const std::array<Row, 3> rows{{{"s208a", "23.77", "17.21"},
                                 {"s420a", "23.41", "9.13"},
                                 {"s838a", "23.24", "5.27"}}};
  if (dir.empty()) return {Verdict::kSkip, "no data directory given"};
  bool ok = true;
  std::string detail;
  std::size_t found = 0;
  for (const auto& row : rows) {
    const auto path = dir / (std::string(row.name) + ".txt");
    if (!std::filesystem::exists(path)) continue;
    ++found;
    const auto net = load_edge_list_file(path.string());
    const Analysis a = analyze(net);
    const auto nm = format_percent(a.report.n_mis);
    const auto cm = format_percent(a.report.cc_max_fraction);
    const bool row_ok =
        nm == row.n_mis && cm == row.cc_max && a.report.cc_max_kind == ComponentKind::kIC;
    ok = ok && row_ok;
    detail += std::string(row.name) + " " + nm + "%/" + cm + "%(" +
              std::string(kind_letter(a.report.cc_max_kind)) + ")" + (row_ok ? "" : " MISMATCH") +
              "; ";
  }
  if (found == 0) return {Verdict::kSkip, "s208a/s420a/s838a edge lists not found in " + dir.string()};
  if (found < rows.size()) detail += std::to_string(rows.size() - found) + " file(s) missing";
  return {ok ? Verdict::kPass : Verdict::kFail, detail};
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string shell_quote(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

Outcome criterion10(const std::string& cli) {
  if (cli.empty()) return {Verdict::kFail, "no CLI path given"};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("ctrlnet_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto sf = dir / "sf.txt";
  const auto conf = dir / "confluence.txt";
  {
    std::ofstream(conf) << "1 3\n2 3\n";
  }
  const std::string bin = shell_quote(cli);
  const auto gen = run(bin + " generate --model SF -n 400 -k 6 --seed 7 -o " + shell_quote(sf));
  if (gen.status != 0) return {Verdict::kFail, "generate failed"};
  const std::vector<std::string> commands{
      bin + " generate --model ER -n 300 -k 4 --seed 11",
      bin + " analyze " + shell_quote(sf) + " --members",
      bin + " components " + shell_quote(sf) + " --format tsv",
      bin + " inputgraph " + shell_quote(sf) + " --seed 3",
      bin + " alter " + shell_quote(conf) + " --component largest-mc --to smc",
      bin + " alter " + shell_quote(sf) + " --component largest --to smc",
      bin + " sweep --model SF -n 300 -k 2,4,6 --seeds 3 --threads 4",
  };
  std::size_t same = 0;
  std::string bad;
  for (const auto& cmd : commands) {
    const auto a = run(cmd), b = run(cmd);
    if (a.status == 0 && b.status == 0 && a.out == b.out && !a.out.empty()) {
      ++same;
    } else {
      bad += " [" + cmd.substr(bin.size() + 1, cmd.find(' ', bin.size() + 1) - bin.size() - 1) + "]";
    }
  }
  // The generated file itself must be reproducible too.
  const auto again = dir / "sf2.txt";
  run(bin + " generate --model SF -n 400 -k 6 --seed 7 -o " + shell_quote(again));
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const bool file_same = slurp(sf) == slurp(again) && !slurp(sf).empty();
  std::filesystem::remove_all(dir);
  const bool ok = same == commands.size() && file_same;
  return {ok ? Verdict::kPass : Verdict::kFail,
          std::to_string(same) + "/" + std::to_string(commands.size()) +
              " commands byte-identical" + (file_same ? "" : ", generated file differs") + bad};
}

Outcome criterion4() {
  for (const auto& net : testing::worked_networks()) check_invariants(net);
  const auto& t = g_invariants;
  return {t.violations == 0 ? Verdict::kPass : Verdict::kFail,
          std::to_string(t.networks) + " networks, " + std::to_string(t.violations) +
              " violations" + (t.violations ? " (first: " + t.first + ")" : "")};
}

}  // namespace
}  // namespace ctrlnet

int main(int argc, char** argv) {
  using namespace ctrlnet;
  const std::string cli = argc > 1 ? argv[1] : "";
  std::filesystem::path data;
  if (argc > 2) {
    data = argv[2];
  } else if (const char* env = std::getenv("CTRLNET_CIRCUIT_DATA")) {
    data = env;
  }

  struct Named {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  // Criterion 4 runs last: it reports on every network the others analyzed.
  const std::vector<Named> order{
      {1, "fan-out exactness", criterion1},
      {2, "oracle equivalence", criterion2},
      {3, "exchange suite", criterion3},
      {5, "giant component emergence", criterion5},
      {6, "bifurcation", criterion6},
      {7, "alteration correctness and trends", criterion7},
      {8, "greedy cover optimality", criterion8},
      {9, "benchmark circuit reproduction", [&] { return criterion9(data); }},
      {10, "determinism", [&] { return criterion10(cli); }},
      {4, "structural invariants", criterion4},
  };
  std::map<int, std::pair<std::string, Outcome>> results;
  for (const auto& c : order) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    o.detail += " [" + fmt(seconds_since(t0), 3) + " s]";
    results[c.number] = {c.name, o};
  }
  int failed = 0;
  for (const auto& [n, r] : results) {
    const auto& [name, o] = r;
    const char* tag = o.verdict == Verdict::kPass ? "PASS" : o.verdict == Verdict::kSkip ? "SKIP" : "FAIL";
    if (o.verdict == Verdict::kFail) ++failed;
    std::cout << "criterion " << n << " (" << name << "): " << tag << " - " << o.detail << '\n';
  }
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria met"))
            << '\n';
  return failed ? 1 : 0;
}
