// Command-line front end: sample generation, defense planning, single
// attacks, full evaluation runs, and the oracle cross-checks.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rlp/attack.hpp"
#include "rlp/damage.hpp"
#include "rlp/defense.hpp"
#include "rlp/edge_list.hpp"
#include "rlp/experiment.hpp"
#include "rlp/ilp.hpp"
#include "rlp/oracle.hpp"
#include "rlp/scenario.hpp"
#include "rlp/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::size_t jobs = 1;
};

rlp::ScenarioConfig load_config(const Common& c) {
  rlp::ScenarioConfig cfg = rlp::ScenarioConfig::from_file(c.config);
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

// Writes through `fn` to the file at `path`, or to stdout when it is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  fn(out);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int cmd_generate(const Common& c, std::size_t count,
                 const std::string& stream_name) {
  const rlp::ScenarioConfig cfg = load_config(c);
  const rlp::SeedStream stream = stream_name == "evaluation"
                                     ? rlp::kEvaluationStream
                                     : rlp::kPlanningStream;
  const rlp::GraphSource source(cfg.source);
  fs::create_directories(c.out);
  std::ofstream index(fs::path(c.out) / "samples.csv");
  index << "index,file,nodes,edges,h_a,h_a_in_hd,hd_edge_fraction\n";
  for (std::size_t i = 0; i < count; ++i) {
    const rlp::AttackerTypeSample s = rlp::draw_sample(cfg, source, stream, i);
    char name[32];
    std::snprintf(name, sizeof name, "sample_%04zu.txt", i);
    const auto edges = s.sample.graph.edges();
    rlp::write_edge_list(fs::path(c.out) / name, edges,
                         s.sample.graph.num_nodes());
    index << i << ',' << name << ',' << s.sample.graph.num_nodes() << ','
          << s.sample.graph.num_edges() << ",\"" << s.h_a.a() << ' '
          << s.h_a.b() << "\"," << (s.h_a_in_hd ? 1 : 0) << ','
          << s.sample.targets.edge_fraction() << '\n';
  }
  std::cerr << "wrote " << count << " samples to " << c.out << '\n';
  return 0;
}

int cmd_plan(const Common& c, bool dump_program) {
  const rlp::ScenarioConfig cfg = load_config(c);
  rlp::RunOptions opts;
  opts.jobs = c.jobs;
  const rlp::PlanningResult planning = rlp::plan_defenses(cfg, opts);
  fs::create_directories(c.out);
  json summary;
  summary["theta"] = planning.loss.theta;
  summary["beta"] = planning.loss.beta;
  summary["planning_samples"] = planning.samples.size();
  summary["h_a_in_hd"] = planning.h_a_in_hd;
  summary["budget_universe"] = cfg.budget_universe();
  summary["ppn_pool"] = planning.ppn_pool;
  summary["plans"] = json::array();
  for (const rlp::PlannedDefense& pd : planning.plans) {
    json entry = {{"defense", std::string(rlp::defense_name(pd.kind))},
                  {"k_D", pd.k_d}};
    const std::string file = std::string(rlp::defense_name(pd.kind)) + "_k" +
                             std::to_string(pd.k_d) + ".txt";
    rlp::write_edge_list(fs::path(c.out) / file, pd.plan.protected_pairs);
    entry["file"] = file;
    entry["protected"] = pd.plan.size();
    entry["expected_damage"] = pd.expected_damage;
    if (pd.kind != rlp::DefenseKind::kPpn) {
      entry["covered_occurrences"] = pd.plan.covered_occurrences;
      entry["single_slot_spent"] = pd.plan.single_slot_spent;
    }
    if (pd.plan.optimality_gap) {
      entry["optimality_gap"] = *pd.plan.optimality_gap;
    }
    summary["plans"].push_back(entry);
  }
  if (dump_program) {
    for (std::size_t k_d : cfg.resolved_budgets()) {
      const rlp::DamageProgram dp =
          rlp::from_damage_graphs(planning.damage_graphs, k_d);
      std::ofstream out(fs::path(c.out) /
                        ("program_k" + std::to_string(k_d) + ".json"));
      out << dp.program.to_json().dump(1) << '\n';
    }
  }
  std::ofstream(fs::path(c.out) / "plans.json") << summary.dump(2) << '\n';
  std::cerr << "wrote " << planning.plans.size() << " plans to " << c.out
            << '\n';
  return 0;
}

struct AttackArgs {
  std::string graph;
  rlp::NodeId v1 = 0;
  rlp::NodeId v2 = 1;
  std::string targets;
  std::size_t vd = 0;
  std::string plan;
  std::string metric = "cn";
  std::string kind = "linkdel";
  double beta = 2.0;
  double theta = 0.0;
  double randdel_p = 0.5;
  std::string damage_json;
};

int cmd_attack(const Common& c, const AttackArgs& a) {
  const rlp::Graph g = rlp::read_dense_graph(a.graph);
  std::vector<rlp::NodeId> nodes;
  if (!a.targets.empty()) {
    for (const std::string& tok : split(a.targets, ',')) {
      nodes.push_back(static_cast<rlp::NodeId>(std::stoul(tok)));
    }
  } else {
    for (rlp::NodeId u = 0; u < a.vd; ++u) nodes.push_back(u);
  }
  const rlp::TargetSet targets = rlp::TargetSet::from_graph(g, nodes);
  rlp::DefensePlan plan;
  if (!a.plan.empty()) {
    auto pairs = rlp::read_pair_list(a.plan);
    const std::size_t n = pairs.size();
    plan = rlp::DefensePlan::make(std::move(pairs), n);
  }
  const rlp::MetricKind m = rlp::parse_metric(a.metric);
  rlp::LossParams loss;
  loss.beta = a.beta;
  loss.theta = a.theta;
  const rlp::NodePair h_a(a.v1, a.v2);
  const rlp::DamageGraph dg =
      rlp::build_damage_graph(g, h_a, targets, m, loss, plan);
  rlp::Rng rng(c.seed.value_or(1));
  const rlp::AttackPlan attack = rlp::run_attack(
      rlp::parse_attack(a.kind), dg, m, rng, rlp::AttackOptions{a.randdel_p});

  const rlp::GraphView after(g, attack.deletions);
  const json report = {
      {"h_a", {h_a.a(), h_a.b()}},
      {"metric", a.metric},
      {"attack", a.kind},
      {"similarity_before", rlp::similarity(m, g, h_a.a(), h_a.b())},
      {"similarity_after", rlp::similarity(m, after, h_a.a(), h_a.b())},
      {"loss_before", rlp::total_loss(g, targets, m, loss)},
      {"loss_after", rlp::total_loss(after, targets, m, loss)},
      {"independent_damage", rlp::plan_damage(dg, attack)},
      {"deletions", attack.deletions.size()}};
  std::cout << report.dump(2) << '\n';
  if (!c.out.empty()) rlp::write_edge_list(c.out, attack.deletions);
  if (!a.damage_json.empty()) {
    std::ofstream(a.damage_json) << dg.to_json().dump(2) << '\n';
  }
  return 0;
}

int cmd_evaluate(const Common& c, bool record_time) {
  const rlp::ScenarioConfig cfg = load_config(c);
  rlp::RunOptions opts;
  opts.jobs = c.jobs;
  opts.record_time = record_time;
  const rlp::ExperimentResult res = rlp::run_experiment(cfg, opts);
  emit(c.out, [&](std::ostream& out) { rlp::write_csv(out, res.rows); });
  std::cerr << "theta " << res.theta << ", " << res.rows.size() << " rows, "
            << res.eval_h_a_in_hd << " of " << cfg.num_eval_attacks
            << " evaluation targets inside H_D\n";
  return 0;
}

int cmd_damage_table(const Common& c, const std::string& classes,
                     const std::string& metrics) {
  const rlp::ScenarioConfig base = load_config(c);
  std::vector<rlp::ScenarioConfig> cfgs;
  for (const std::string& cls : split(classes, ',')) {
    for (const std::string& m : split(metrics, ',')) {
      rlp::ScenarioConfig cfg = base;
      cfg.scenario_class = rlp::parse_scenario(cls);
      cfg.metric = rlp::parse_metric(m);
      cfgs.push_back(cfg);
    }
  }
  rlp::RunOptions opts;
  opts.jobs = c.jobs;
  const auto cells = rlp::damage_table(cfgs, opts);
  emit(c.out, [&](std::ostream& out) { rlp::write_damage_csv(out, cells); });
  return 0;
}

int cmd_verify(const Common& c, double scale) {
  const std::uint64_t seed = c.seed.value_or(20240501);
  auto n = [&](std::size_t full) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(full * scale));
  };
  std::vector<rlp::DiagnosticRow> diagnostics;
  const rlp::SuiteReport reports[] = {
      rlp::verify_attacks(n(200), seed, &diagnostics),
      rlp::verify_ilp(n(500), 18, seed),
      rlp::verify_defenses(n(100), seed),
      rlp::verify_gadgets(5, n(100), 7, seed),
  };
  bool ok = true;
  for (const rlp::SuiteReport& r : reports) {
    std::printf("%s %-20s %6zu checks %8.2fs", r.passed() ? "PASS" : "FAIL",
                r.name.c_str(), r.checked, r.seconds);
    if (!r.passed()) std::printf("  (%zu failed; %s)", r.failures,
                                 r.first_failure.c_str());
    std::printf("\n");
    ok = ok && r.passed();
  }
  if (!c.out.empty()) {
    emit(c.out, [&](std::ostream& out) {
      rlp::write_diagnostics_csv(out, diagnostics);
    });
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliable-query defenses for link prediction under deletion "
               "attacks"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", common.config,
                                "Scenario configuration (JSON)");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", common.seed, "Override the master seed");
    sub->add_option("--jobs", common.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
  };

  auto* generate = app.add_subcommand("generate", "Write sampled graphs");
  add_common(generate, true);
  std::size_t count = 1;
  std::string stream = "planning";
  generate->add_option("--out", common.out, "Output directory")->required();
  generate->add_option("--count", count, "Number of samples");
  generate->add_option("--stream", stream, "planning or evaluation")
      ->check(CLI::IsMember({"planning", "evaluation"}));

  auto* plan = app.add_subcommand("plan", "Compute defense plans");
  add_common(plan, true);
  bool dump_program = false;
  plan->add_option("--out", common.out, "Output directory")->required();
  plan->add_flag("--dump-program", dump_program,
                 "Also write each budget's 0-1 program as JSON");

  auto* attack = app.add_subcommand("attack", "Apply one attack to a graph");
  AttackArgs aa;
  attack->add_option("--graph", aa.graph, "Edge list with compact ids")
      ->required()
      ->check(CLI::ExistingFile);
  attack->add_option("--v1", aa.v1, "First endpoint of the hidden edge");
  attack->add_option("--v2", aa.v2, "Second endpoint of the hidden edge");
  attack->add_option("--targets", aa.targets, "Comma-separated target nodes");
  attack->add_option("--vd", aa.vd, "Use nodes 0..N-1 as targets");
  attack->add_option("--plan", aa.plan, "Protected pairs (edge list)");
  attack->add_option("--metric", aa.metric, "Similarity metric");
  attack->add_option("--kind", aa.kind, "linkdel, unbiaseddel or randdel");
  attack->add_option("--beta", aa.beta, "Loss slope");
  attack->add_option("--theta", aa.theta, "Loss threshold");
  attack->add_option("--randdel-p", aa.randdel_p, "Deletion probability");
  attack->add_option("--damage-json", aa.damage_json,
                     "Write the damage graph as JSON");
  attack->add_option("--seed", common.seed, "Seed for randomized attacks");
  attack->add_option("--out", common.out, "Write the deletions here");

  auto* evaluate = app.add_subcommand("evaluate", "Run the full pipeline");
  add_common(evaluate, true);
  bool record_time = false;
  evaluate->add_option("--out", common.out, "CSV path (default stdout)");
  evaluate->add_flag("--record-time", record_time,
                     "Fill wall_time with planning seconds");

  auto* table = app.add_subcommand("damage-table",
                                   "Percent damage per scenario and metric");
  add_common(table, true);
  std::string classes = "TCA,RCA,TSA,RSA";
  std::string metrics = "cn,sorensen,ra,salton";
  table->add_option("--classes", classes, "Comma-separated scenario classes");
  table->add_option("--metrics", metrics, "Comma-separated metrics");
  table->add_option("--out", common.out, "CSV path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the oracle cross-checks");
  double scale = 1.0;
  verify->add_option("--seed", common.seed, "Seed for random instances");
  verify->add_option("--scale", scale, "Fraction of the default instance "
                                       "counts")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", common.out, "Diagnostics CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(common, count, stream);
    if (*plan) return cmd_plan(common, dump_program);
    if (*attack) return cmd_attack(common, aa);
    if (*evaluate) return cmd_evaluate(common, record_time);
    if (*table) return cmd_damage_table(common, classes, metrics);
    if (*verify) return cmd_verify(common, scale);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
