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

#include "ctrlnet/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctrlnet/alteration.hpp"
#include "ctrlnet/analysis.hpp"
#include "ctrlnet/generators.hpp"
#include "ctrlnet/graph.hpp"
#include "ctrlnet/oracle.hpp"
#include "ctrlnet/report.hpp"
#include "ctrlnet/sweep.hpp"

namespace ctrlnet {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  bool members = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "Seed (matching scan order or generator)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_option("-o,--output", o.output, "Write output to this path");
  cmd->add_flag("--members", o.members,
                "Emit node-level lists even for networks above 10^4 nodes");
}

// Writes to the -o file when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ParseError(0, "cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

void emit_json(const json& doc, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  *sink << doc.dump(2) << '\n';
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError(0, "cannot write '" + path + "'");
  body(file);
}

NodeId require_node(const DirectedNetwork& net, const std::string& label) {
  const auto id = net.find(label);
  if (!id) throw std::invalid_argument("unknown node '" + label + "'");
  return *id;
}

// id | largest | largest-ic | largest-mc | largest-umc | largest-smc
const ControlComponent& select_component(const Analysis& a, const std::string& sel) {
  const auto& comps = a.report.components;
  if (sel == "largest") return comps[largest_component(comps)];
  auto pick = [&](auto&& accept) -> const ControlComponent& {
    std::vector<ControlComponent> subset;
    for (const auto& c : comps) {
      if (accept(c.kind)) subset.push_back(c);
    }
    if (subset.empty()) {
      throw InfeasibleAlteration("no component matches selector '" + sel + "'");
    }
    return comps[subset[largest_component(subset)].id];
  };
  if (sel == "largest-ic") return pick([](ComponentKind k) { return k == ComponentKind::kIC; });
  if (sel == "largest-umc") return pick([](ComponentKind k) { return k == ComponentKind::kUMC; });
  if (sel == "largest-smc") return pick([](ComponentKind k) { return k == ComponentKind::kSMC; });
  if (sel == "largest-mc") {
    return pick([](ComponentKind k) {
      return k == ComponentKind::kUMC || k == ComponentKind::kSMC;
    });
  }
  std::size_t id = 0;
  try {
    std::size_t used = 0;
    id = std::stoul(sel, &used);
    if (used != sel.size()) throw std::invalid_argument(sel);
  } catch (const std::exception&) {
    throw UsageError("bad component selector '" + sel + "'");
  }
  if (id >= comps.size()) {
    throw InfeasibleAlteration("component " + sel + " does not exist");
  }
  return comps[id];
}

int cmd_generate(const CommonOptions& o, const std::string& model, std::size_t n,
                 double k, double gamma_in, double gamma_out, std::ostream& out) {
  GenSpec spec{parse_model(model), n, k, gamma_in, gamma_out, o.seed};
  const DirectedNetwork net = generate(spec);
  Sink sink(o.output, out);
  *sink << "# generator: " << model_name(spec.model) << '\n'
        << "# N: " << spec.nodes << '\n'
        << "# avg_degree: " << format_ratio(spec.avg_degree) << '\n';
  if (spec.model == Model::kSF) {
    *sink << "# gamma_in: " << format_ratio(spec.gamma_in) << '\n'
          << "# gamma_out: " << format_ratio(spec.gamma_out) << '\n';
  }
  *sink << "# seed: " << spec.seed << '\n'
        << "# L: " << net.edge_count() << '\n';
  write_edge_list(net, *sink);
  return kExitOk;
}

int cmd_analyze(const CommonOptions& o, const std::string& path, bool timing,
                std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const DirectedNetwork net = load_edge_list_file(path);
  const Analysis a = analyze(net, o.seed);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  if (o.format == "tsv") {
    Sink sink(o.output, out);
    write_analysis_tsv(a, *sink);
    if (timing) *sink << "elapsed_ms\t" << format_ratio(elapsed_ms) << '\n';
    return kExitOk;
  }
  json doc = analysis_json(net, a, {o.members});
  doc["matching_seed"] = o.seed;
  if (timing) doc["elapsed_ms"] = ratio6(elapsed_ms);
  emit_json(doc, o.output, out);
  return kExitOk;
}

int cmd_classify(const CommonOptions& o, const std::string& path, std::ostream& out) {
  const DirectedNetwork net = load_edge_list_file(path);
  const Analysis a = analyze(net, o.seed);
  if (o.format == "tsv") {
    Sink sink(o.output, out);
    write_classes_tsv(net, a, *sink);
    return kExitOk;
  }
  json nodes = json::object();
  for (NodeId v = 0; v < net.node_count(); ++v) {
    nodes[net.label(v)] = std::string(class_name(a.classes[v]));
  }
  emit_json(json{{"classes", std::move(nodes)}}, o.output, out);
  return kExitOk;
}

int cmd_inputgraph(const CommonOptions& o, const std::string& path, std::ostream& out) {
  const DirectedNetwork net = load_edge_list_file(path);
  const Analysis a = analyze(net, o.seed);
  if (o.format == "tsv") {
    Sink sink(o.output, out);
    write_input_graph_tsv(net, a.input_graph, *sink);
    return kExitOk;
  }
  auto edges = [&](std::span<const ControlAdjacencyEdge> list) {
    json arr = json::array();
    for (const auto& e : list) {
      arr.push_back({{"from", net.label(e.from)},
                     {"to", net.label(e.to)},
                     {"witness", net.label(e.witness)}});
    }
    return arr;
  };
  emit_json(json{{"Di", edges(a.input_graph.possible_edges())},
                 {"Dr", edges(a.input_graph.redundant_edges())}},
            o.output, out);
  return kExitOk;
}

int cmd_components(const CommonOptions& o, const std::string& path, std::ostream& out) {
  const DirectedNetwork net = load_edge_list_file(path);
  const Analysis a = analyze(net, o.seed);
  if (o.format == "tsv") {
    Sink sink(o.output, out);
    write_components_tsv(net, a, {o.members}, *sink);
    return kExitOk;
  }
  emit_json(components_json(net, a, {o.members}), o.output, out);
  return kExitOk;
}

struct AlterOptions {
  std::string component = "largest";
  std::string to;
  std::string mode = "single";
  std::string edges_out;
  std::string network_out;
};

int cmd_alter(const CommonOptions& o, const AlterOptions& ao, const std::string& path,
              std::ostream& out, std::ostream& err) {
  const DirectedNetwork net = load_edge_list_file(path);
  const Analysis before = analyze(net, o.seed);
  const ControlComponent& comp = select_component(before, ao.component);
  const CoverMode mode = ao.mode == "full" ? CoverMode::kFull : CoverMode::kSingle;

  AlterationPlan plan;
  if (ao.to == "smc") {
    switch (comp.kind) {
      case ComponentKind::kIC: plan = ic_to_smc(net, before.matching, comp); break;
      case ComponentKind::kUMC: plan = umc_to_smc(net, before.matching, comp); break;
      default:
        throw InfeasibleAlteration("component " + std::to_string(comp.id) +
                                   " is already an SMC");
    }
  } else {
    switch (comp.kind) {
      case ComponentKind::kSMC:
        plan = mode == CoverMode::kFull ? smc_to_ic_full(net, before.matching, comp)
                                        : smc_to_ic_single(net, before.matching, comp);
        break;
      case ComponentKind::kUMC:
        plan = umc_to_ic(net, before.matching, comp, mode);
        break;
      default:
        throw InfeasibleAlteration("component " + std::to_string(comp.id) +
                                   " is already an IC");
    }
  }
  const DirectedNetwork altered = apply_plan(net, plan);
  const Analysis after = analyze(altered, o.seed);
  plan = alteration_report(before, after, std::move(plan));
  const bool attained = attains_target(after, plan);
  if (!attained) {
    err << "warning: re-analysis does not show the requested kind\n";
  }

  if (!ao.edges_out.empty()) {
    write_file(ao.edges_out, [&](std::ostream& f) { write_additions_tsv(net, plan, f); });
  }
  if (!ao.network_out.empty()) {
    write_file(ao.network_out, [&](std::ostream& f) { write_edge_list(altered, f); });
  }
  if (o.format == "tsv") {
    Sink sink(o.output, out);
    write_additions_tsv(net, plan, *sink);
    return kExitOk;
  }
  const ReportOptions ropts{o.members};
  emit_json(json{{"plan", plan_json(net, plan)},
                 {"attained", attained},
                 {"before", components_json(net, before, {false})},
                 {"after", components_json(altered, after, {false})},
                 {"before_classes", analysis_json(net, before, ropts)["classes"]},
                 {"after_classes", analysis_json(altered, after, ropts)["classes"]}},
            o.output, out);
  return kExitOk;
}

int cmd_exchange(const CommonOptions& o, const std::string& path,
                 const std::string& node, const std::string& witness,
                 std::ostream& out) {
  const DirectedNetwork net = load_edge_list_file(path);
  const Matching m = maximum_matching(net, o.seed);
  const NodeId n = require_node(net, node);
  if (m.in_matched(n)) {
    throw std::invalid_argument("node '" + node +
                                "' is not an input node of this matching");
  }
  if (net.in_degree(n) == 0) {
    throw std::invalid_argument("node '" + node +
                                "' has no in-edge and appears in every MIS");
  }
  std::vector<NodeId> witnesses;
  if (witness.empty()) {
    const auto preds = net.in_neighbors(n);
    witnesses.assign(preds.begin(), preds.end());
  } else {
    witnesses.push_back(require_node(net, witness));
  }
  auto labels = [&](const std::vector<NodeId>& ids) {
    json arr = json::array();
    for (NodeId v : ids) arr.push_back(net.label(v));
    return arr;
  };
  json swaps = json::array();
  for (NodeId c : witnesses) {
    const ExchangeResult r = exchange(net, m, n, c);
    swaps.push_back({{"witness", net.label(c)},
                     {"replaced", net.label(r.replaced)},
                     {"mis_after", labels(input_nodes(net, r.matching).nodes)}});
  }
  if (o.format == "tsv") {
    Sink sink(o.output, out);
    *sink << "# node\twitness\treplaced\n";
    for (const auto& s : swaps) {
      *sink << node << '\t' << s["witness"].get<std::string>() << '\t'
            << s["replaced"].get<std::string>() << '\n';
    }
    return kExitOk;
  }
  emit_json(json{{"node", node},
                 {"mis_before", labels(input_nodes(net, m).nodes)},
                 {"exchanges", std::move(swaps)}},
            o.output, out);
  return kExitOk;
}

int cmd_oracle_check(const CommonOptions& o, const std::string& path,
                     const OracleGuard& guard, std::ostream& out) {
  const DirectedNetwork net = load_edge_list_file(path);
  const Analysis a = analyze(net, o.seed);
  const EnumerationResult r = enumerate_maximum_matchings(net, guard);
  const std::vector<NodeClass> truth = classify_exhaustive(net, guard);

  json diff = json::array();
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (!(truth[v] == a.classes[v])) {
      diff.push_back({{"node", net.label(v)},
                      {"pipeline", std::string(class_name(a.classes[v]))},
                      {"oracle", std::string(class_name(truth[v]))}});
    }
  }
  bool union_matches = true;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    union_matches &= (r.in_some_mis[v] != 0) == a.input_graph.is_possible_input(v);
  }
  const bool agree = diff.empty() && union_matches &&
                     r.matching_size == a.matching.size();
  json doc{{"agree", agree},
           {"N", net.node_count()},
           {"matching_size", r.matching_size},
           {"pipeline_matching_size", a.matching.size()},
           {"maximum_matchings", r.matching_count},
           {"distinct_mis", r.mis_list.size()},
           {"possible_set_equals_mis_union", union_matches},
           {"diff", std::move(diff)}};
  if (o.format == "tsv") {
    Sink sink(o.output, out);
    *sink << "agree\t" << (agree ? "true" : "false") << '\n'
          << "maximum_matchings\t" << r.matching_count << '\n'
          << "distinct_mis\t" << r.mis_list.size() << '\n';
    for (const auto& d : doc["diff"]) {
      *sink << "diff\t" << d["node"].get<std::string>() << '\t'
            << d["pipeline"].get<std::string>() << '\t'
            << d["oracle"].get<std::string>() << '\n';
    }
  } else {
    emit_json(doc, o.output, out);
  }
  if (!agree) throw OracleMismatch("pipeline and oracle disagree");
  return kExitOk;
}

int cmd_sweep(const CommonOptions& o, const SweepConfig& base, std::size_t seed_count,
              std::ostream& out) {
  SweepConfig cfg = base;
  for (std::size_t i = 0; i < seed_count; ++i) cfg.seeds.push_back(o.seed + i);
  const std::vector<SweepRecord> rows = run_sweep(cfg);
  Sink sink(o.output, out);
  write_sweep_header(*sink);
  for (const auto& row : rows) write_sweep_row(row, *sink);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural controllability analysis: input graphs, control "
               "components and type alterations"};
  app.name("ctrlnet");
  app.require_subcommand(1);

  CommonOptions common;
  std::string file;
  auto file_command = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "Edge-list file")->required();
    add_common(cmd, common);
    return cmd;
  };

  // generate
  std::string model;
  std::size_t nodes = 0;
  double avg_degree = 0.0;
  double gamma_in = 3.0, gamma_out = 3.0;
  CLI::App* generate_cmd = app.add_subcommand("generate", "Generate an ER or SF network");
  generate_cmd->add_option("--model", model, "ER or SF")
      ->required()
      ->check(CLI::IsMember({"ER", "SF", "er", "sf"}));
  generate_cmd->add_option("-n,--nodes", nodes, "Node count")->required();
  generate_cmd->add_option("-k,--avg-degree", avg_degree, "Average degree 2L/N")->required();
  generate_cmd->add_option("--gamma-in", gamma_in, "SF in-degree exponent");
  generate_cmd->add_option("--gamma-out", gamma_out, "SF out-degree exponent");
  add_common(generate_cmd, common);

  bool timing = false;
  CLI::App* analyze_cmd = file_command("analyze", "Full analysis report");
  analyze_cmd->add_flag("--timing", timing, "Include elapsed time (not deterministic)");
  CLI::App* classify_cmd = file_command("classify", "Per-node control class");
  CLI::App* inputgraph_cmd = file_command("inputgraph", "Control-adjacency edges");
  CLI::App* components_cmd = file_command("components", "Control components");

  AlterOptions alter_opts;
  CLI::App* alter_cmd = file_command("alter", "Plan edge additions that flip a component");
  alter_cmd->add_option("--component", alter_opts.component,
                        "Component id, largest, largest-ic, largest-mc, "
                        "largest-umc or largest-smc");
  alter_cmd->add_option("--to", alter_opts.to, "Target kind")
      ->required()
      ->check(CLI::IsMember({"smc", "ic"}));
  alter_cmd->add_option("--mode", alter_opts.mode, "SMC -> IC cover")
      ->check(CLI::IsMember({"single", "full"}));
  alter_cmd->add_option("--edges-out", alter_opts.edges_out, "Write added edges (TSV)");
  alter_cmd->add_option("--network-out", alter_opts.network_out,
                        "Write the altered network");

  std::string node, witness;
  CLI::App* exchange_cmd = file_command("exchange", "Swap an input node with a partner");
  exchange_cmd->add_option("--node", node, "Input node label")->required();
  exchange_cmd->add_option("--witness", witness, "In-neighbour to exchange through");

  OracleGuard guard;
  CLI::App* oracle_cmd = file_command("oracle-check", "Compare with exhaustive enumeration");
  oracle_cmd->add_option("--max-nodes", guard.max_nodes, "Enumeration node limit");
  oracle_cmd->add_option("--max-count", guard.max_count, "Enumeration matching limit");

  SweepConfig sweep;
  std::size_t seed_count = 10;
  common.seed = 0;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Generate and analyze a degree sweep");
  sweep_cmd->add_option("--model", model, "ER or SF")
      ->required()
      ->check(CLI::IsMember({"ER", "SF", "er", "sf"}));
  sweep_cmd->add_option("-n,--nodes", sweep.nodes, "Node count")->required();
  sweep_cmd->add_option("-k,--k", sweep.degrees, "Average degrees")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--seeds", seed_count, "Replicates per degree (seeds start at --seed)");
  sweep_cmd->add_option("--gamma-in", sweep.gamma_in, "SF in-degree exponent");
  sweep_cmd->add_option("--gamma-out", sweep.gamma_out, "SF out-degree exponent");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0: all cores)");
  add_common(sweep_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate_cmd) {
      return cmd_generate(common, model, nodes, avg_degree, gamma_in, gamma_out, out);
    }
    if (*analyze_cmd) return cmd_analyze(common, file, timing, out);
    if (*classify_cmd) return cmd_classify(common, file, out);
    if (*inputgraph_cmd) return cmd_inputgraph(common, file, out);
    if (*components_cmd) return cmd_components(common, file, out);
    if (*alter_cmd) return cmd_alter(common, alter_opts, file, out, err);
    if (*exchange_cmd) return cmd_exchange(common, file, node, witness, out);
    if (*oracle_cmd) return cmd_oracle_check(common, file, guard, out);
    if (*sweep_cmd) {
      sweep.model = parse_model(model);
      if (common.seed == 0 && sweep_cmd->count("--seed") == 0) common.seed = 1;
      return cmd_sweep(common, sweep, seed_count, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InfeasibleAlteration& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const OracleInfeasible& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleGuard;
  } catch (const OracleMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace ctrlnet
