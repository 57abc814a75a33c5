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

#include "ctrlnet/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace ctrlnet {

using nlohmann::json;

double percent2(double fraction) {
  return std::round(fraction * 10000.0) / 100.0;
}

std::string format_ratio(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

double ratio6(double value) { return std::strtod(format_ratio(value).c_str(), nullptr); }

std::string format_percent(double fraction) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", percent2(fraction));
  return buf;
}

std::string_view class_name(const NodeClass& c) {
  if (c.kind == ControlClass::kRedundant) return "redundant";
  return c.critical ? "critical" : "possible_input";
}

namespace {

json labels_of(const DirectedNetwork& net, std::span<const NodeId> ids) {
  json out = json::array();
  for (NodeId v : ids) out.push_back(net.label(v));
  return out;
}

bool want_members(const DirectedNetwork& net, const ReportOptions& opts) {
  return opts.members || net.node_count() <= kMemberListLimit;
}

}  // namespace

nlohmann::json components_json(const DirectedNetwork& net, const Analysis& a,
                               const ReportOptions& opts) {
  const ComponentReport& r = a.report;
  const bool members = want_members(net, opts);
  json comps = json::array();
  std::size_t ic = 0, umc = 0, smc = 0;
  for (const ControlComponent& c : r.components) {
    json item{{"id", c.id},
              {"size", c.size()},
              {"kind", std::string(kind_name(c.kind))},
              {"fraction", ratio6(static_cast<double>(c.size()) / r.nodes)}};
    if (members) item["members"] = labels_of(net, c.members);
    comps.push_back(std::move(item));
    ic += c.kind == ComponentKind::kIC;
    umc += c.kind == ComponentKind::kUMC;
    smc += c.kind == ComponentKind::kSMC;
  }
  // Largest component of each kind (zero when the kind is absent).
  auto largest_of = [&](ComponentKind kind) {
    std::size_t best = 0;
    for (const auto& c : r.components) {
      if (c.kind == kind) best = std::max(best, c.size());
    }
    return percent2(static_cast<double>(best) / r.nodes);
  };
  return json{
      {"N", r.nodes},
      {"L", r.edges},
      {"avg_degree", ratio6(r.avg_degree)},
      {"mis_size", r.mis_size},
      {"n_mis", ratio6(r.n_mis)},
      {"n_mis_pct", percent2(r.n_mis)},
      {"component_count", r.components.size()},
      {"kind_counts", {{"IC", ic}, {"UMC", umc}, {"SMC", smc}}},
      {"largest_by_kind_pct",
       {{"IC", largest_of(ComponentKind::kIC)},
        {"UMC", largest_of(ComponentKind::kUMC)},
        {"SMC", largest_of(ComponentKind::kSMC)}}},
      {"cc_max",
       {{"id", r.cc_max_id},
        {"fraction", ratio6(r.cc_max_fraction)},
        {"pct", percent2(r.cc_max_fraction)},
        {"kind", std::string(kind_letter(r.cc_max_kind))},
        {"size", r.components[r.cc_max_id].size()}}},
      {"components", std::move(comps)},
  };
}

nlohmann::json analysis_json(const DirectedNetwork& net, const Analysis& a,
                             const ReportOptions& opts) {
  const NetworkStats stats = basic_stats(net);
  const bool members = want_members(net, opts);
  std::size_t critical = 0;
  for (const NodeClass& c : a.classes) critical += c.critical;
  const std::size_t possible = a.possible_input_count();

  json out{
      {"network",
       {{"N", stats.nodes},
        {"L", stats.edges},
        {"avg_degree", ratio6(stats.avg_degree)},
        {"self_loops", stats.self_loops},
        {"duplicates_collapsed", net.duplicates_collapsed()}}},
      {"mis",
       {{"size", a.inputs.nodes.size()},
        {"n_mis", ratio6(a.report.n_mis)},
        {"n_mis_pct", percent2(a.report.n_mis)},
        {"perfectly_matched", a.inputs.perfectly_matched}}},
      {"classes",
       {{"possible_input", possible},
        {"redundant", a.classes.size() - possible},
        {"critical", critical},
        {"n_p", ratio6(a.possible_input_fraction())}}},
      {"input_graph",
       {{"edges_possible", a.input_graph.possible_edges().size()},
        {"edges_redundant", a.input_graph.redundant_edges().size()}}},
      {"components", components_json(net, a, opts)},
  };
  if (members) {
    out["mis"]["members"] = labels_of(net, a.inputs.nodes);
    json per_node = json::object();
    for (NodeId v = 0; v < net.node_count(); ++v) {
      per_node[net.label(v)] = std::string(class_name(a.classes[v]));
    }
    out["classes"]["nodes"] = std::move(per_node);
    json matched = json::array();
    for (const Edge& e : a.matching.edges()) {
      matched.push_back(json::array({net.label(e.src), net.label(e.dst)}));
    }
    out["matching"] = std::move(matched);
  }
  return out;
}

nlohmann::json plan_json(const DirectedNetwork& net, const AlterationPlan& plan) {
  json additions = json::array();
  for (const EdgeAddition& e : plan.additions) {
    additions.push_back({{"src", net.label(e.src)},
                         {"dst", net.label(e.dst)},
                         {"reason", std::string(reason_tag(e.reason))}});
  }
  return json{
      {"target_component", plan.target_component},
      {"from", std::string(kind_name(plan.from_kind))},
      {"to", std::string(kind_name(plan.to_kind))},
      {"target_size", plan.target_members.size()},
      {"additions", std::move(additions)},
      {"added_edges", plan.additions.size()},
      {"rounds", plan.rounds},
      {"p", ratio6(plan.p)},
      {"p_pct", ratio6(plan.p * 100.0)},
      {"delta_nd", ratio6(plan.delta_nd)},
      {"delta_nd_pct", percent2(plan.delta_nd)},
      {"changed_nodes", plan.changed_nodes},
      {"mis_before", plan.mis_before},
      {"mis_after", plan.mis_after},
  };
}

void write_classes_tsv(const DirectedNetwork& net, const Analysis& a,
                       std::ostream& out) {
  out << "# node\tclass\n";
  for (NodeId v = 0; v < net.node_count(); ++v) {
    out << net.label(v) << '\t' << class_name(a.classes[v]) << '\n';
  }
}

void write_components_tsv(const DirectedNetwork& net, const Analysis& a,
                          const ReportOptions& opts, std::ostream& out) {
  const bool members = want_members(net, opts);
  out << "# id\tsize\tkind" << (members ? "\tmembers" : "") << '\n';
  for (const ControlComponent& c : a.report.components) {
    out << c.id << '\t' << c.size() << '\t' << kind_name(c.kind);
    if (members) {
      out << '\t';
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        out << (i ? "," : "") << net.label(c.members[i]);
      }
    }
    out << '\n';
  }
}

void write_input_graph_tsv(const DirectedNetwork& net, const InputGraph& ig,
                           std::ostream& out) {
  out << "# from\tto\twitness\n";
  out << "# phase: Di\n";
  for (const auto& e : ig.possible_edges()) {
    out << net.label(e.from) << '\t' << net.label(e.to) << '\t'
        << net.label(e.witness) << '\n';
  }
  out << "# phase: Dr\n";
  for (const auto& e : ig.redundant_edges()) {
    out << net.label(e.from) << '\t' << net.label(e.to) << '\t'
        << net.label(e.witness) << '\n';
  }
}

void write_additions_tsv(const DirectedNetwork& net, const AlterationPlan& plan,
                         std::ostream& out) {
  out << "# src\tdst\treason\n";
  for (const EdgeAddition& e : plan.additions) {
    out << net.label(e.src) << '\t' << net.label(e.dst) << '\t'
        << reason_tag(e.reason) << '\n';
  }
}

void write_analysis_tsv(const Analysis& a, std::ostream& out) {
  const ComponentReport& r = a.report;
  out << "N\t" << r.nodes << '\n'
      << "L\t" << r.edges << '\n'
      << "avg_degree\t" << format_ratio(r.avg_degree) << '\n'
      << "mis_size\t" << r.mis_size << '\n'
      << "n_mis_pct\t" << format_percent(r.n_mis) << '\n'
      << "n_p\t" << format_ratio(a.possible_input_fraction()) << '\n'
      << "component_count\t" << r.components.size() << '\n'
      << "cc_max_pct\t" << format_percent(r.cc_max_fraction) << '\n'
      << "cc_max_kind\t" << kind_letter(r.cc_max_kind) << '\n'
      << "perfectly_matched\t" << (a.inputs.perfectly_matched ? "true" : "false")
      << '\n';
}

}  // namespace ctrlnet
