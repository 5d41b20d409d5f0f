#include "rlp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "rlp/attack.hpp"
#include "rlp/parallel.hpp"

namespace rlp {

AttackerTypeSample draw_sample(const ScenarioConfig& cfg,
                               const GraphSource& source, SeedStream stream,
                               std::size_t index) {
  Rng rng(derive_seed(cfg.seed, stream, index));
  return sample_attacker_type(cfg, source, rng);
}

LossParams resolve_loss(const ScenarioConfig& cfg,
                        std::span<const AttackerTypeSample> planning) {
  LossParams loss = cfg.loss;
  if (cfg.auto_theta) {
    std::vector<LabeledGraph> graphs;
    graphs.reserve(planning.size());
    for (const AttackerTypeSample& s : planning) graphs.push_back(s.sample);
    loss.theta = calibrate_theta(graphs, cfg.metric);
  }
  return loss;
}

namespace {

std::vector<AttackerTypeSample> draw_all(const ScenarioConfig& cfg,
                                         const GraphSource& source,
                                         SeedStream stream, std::size_t count,
                                         std::size_t jobs) {
  std::vector<AttackerTypeSample> out(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    out[i] = draw_sample(cfg, source, stream, i);
  });
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

PlanningResult plan_defenses(const ScenarioConfig& cfg,
                             const RunOptions& opts) {
  cfg.validate();
  const GraphSource source(cfg.source);
  PlanningResult out;
  out.samples = draw_all(cfg, source, kPlanningStream,
                         cfg.num_planning_samples, opts.jobs);
  out.loss = resolve_loss(cfg, out.samples);
  out.damage_graphs.resize(out.samples.size());
  parallel_for(out.samples.size(), opts.jobs, [&](std::size_t i) {
    const AttackerTypeSample& s = out.samples[i];
    out.damage_graphs[i] =
        build_damage_graph(s.sample.graph, s.h_a, s.sample.targets, cfg.metric,
                           out.loss, {}, cfg.damage_sign);
    out.damage_graphs[i].sample_index = i;
  });
  for (const AttackerTypeSample& s : out.samples) out.h_a_in_hd += s.h_a_in_hd;

  // PPN commits to one plan like the other defenses, so its candidate pool is
  // every critical edge seen in some planning sample.
  CriticalEdgeSet pool;
  for (const AttackerTypeSample& s : out.samples) {
    const CriticalEdgeSet ec = critical_edges(s.sample.graph, s.sample.targets);
    pool.edges.insert(pool.edges.end(), ec.edges.begin(), ec.edges.end());
  }
  std::sort(pool.edges.begin(), pool.edges.end());
  pool.edges.erase(std::unique(pool.edges.begin(), pool.edges.end()),
                   pool.edges.end());
  out.ppn_pool = pool.edges.size();

  for (DefenseKind kind : cfg.defenses) {
    if (kind == DefenseKind::kNone) continue;
    for (std::size_t k_d : cfg.resolved_budgets()) {
      PlannedDefense pd;
      pd.kind = kind;
      pd.k_d = k_d;
      out.plans.push_back(pd);
    }
  }
  parallel_for(out.plans.size(), opts.jobs, [&](std::size_t i) {
    PlannedDefense& pd = out.plans[i];
    const auto t0 = std::chrono::steady_clock::now();
    if (pd.kind == DefenseKind::kIdOpt) {
      pd.plan = idopt(out.damage_graphs, pd.k_d, cfg.solver);
    } else if (pd.kind == DefenseKind::kIdRank) {
      pd.plan = idrank(out.damage_graphs, pd.k_d);
    } else if (pd.kind == DefenseKind::kPpn) {
      Rng rng(derive_seed(cfg.seed, kPpnStream, i));
      pd.plan = ppn(pool, pd.k_d, rng);
    }
    pd.plan.budget = pd.k_d;
    pd.expected_damage = expected_damage(out.damage_graphs, pd.plan);
    pd.seconds = seconds_since(t0);
  });
  return out;
}

double AttackTotals::percent_damage() const {
  return 100.0 * (la - l0) / l0;
}

ExperimentResult evaluate_plans(const ScenarioConfig& cfg,
                                const LossParams& loss,
                                std::span<const EvalPlan> plans,
                                const RunOptions& opts) {
  cfg.validate();
  const GraphSource source(cfg.source);
  const std::size_t n_eval = cfg.num_eval_attacks;
  const std::size_t n_attacks = cfg.attacks.size();
  const std::size_t n_plans = plans.size();
  const AttackOptions attack_opts{cfg.randdel_p};

  struct SampleLosses {
    double l0 = 0.0;
    bool h_a_in_hd = false;
    std::vector<double> la;  // per attack
    std::vector<double> ld;  // per attack, per plan
  };
  std::vector<SampleLosses> per_sample(n_eval);

  parallel_for(n_eval, opts.jobs, [&](std::size_t j) {
    const AttackerTypeSample s = draw_sample(cfg, source, kEvaluationStream, j);
    const Graph& g = s.sample.graph;
    const TargetSet& targets = s.sample.targets;
    const DamageGraph open = build_damage_graph(g, s.h_a, targets, cfg.metric,
                                                loss, {}, cfg.damage_sign);

    std::vector<DefensePlan> sample_plans(n_plans);
    std::optional<CriticalEdgeSet> ec;
    for (std::size_t p = 0; p < n_plans; ++p) {
      if (plans[p].fixed) {
        sample_plans[p] = *plans[p].fixed;
        continue;
      }
      if (!ec) ec = critical_edges(g, targets);
      Rng rng(derive_seed(derive_seed(cfg.seed, kPpnStream, p), 0, j));
      sample_plans[p] = ppn(*ec, plans[p].k_d, rng);
    }

    SampleLosses& out = per_sample[j];
    out.h_a_in_hd = s.h_a_in_hd;
    out.l0 = total_loss(g, targets, cfg.metric, loss);
    out.la.resize(n_attacks);
    out.ld.resize(n_attacks * n_plans);
    for (std::size_t a = 0; a < n_attacks; ++a) {
      const std::uint64_t coins =
          derive_seed(cfg.seed, kAttackCoinStream, j * n_attacks + a);
      auto attacked_loss = [&](const DamageGraph& dg) {
        Rng rng(coins);
        const AttackPlan attack =
            run_attack(cfg.attacks[a], dg, cfg.metric, rng, attack_opts);
        return total_loss(GraphView(g, attack.deletions), targets, cfg.metric,
                          loss);
      };
      out.la[a] = attacked_loss(open);
      for (std::size_t p = 0; p < n_plans; ++p) {
        out.ld[a * n_plans + p] =
            attacked_loss(with_protection(open, sample_plans[p]));
      }
    }
  });

  ExperimentResult res;
  res.theta = loss.theta;
  const double scale = 1.0 / static_cast<double>(n_eval);
  double l0 = 0.0;
  for (const SampleLosses& s : per_sample) {
    l0 += s.l0;
    res.eval_h_a_in_hd += s.h_a_in_hd;
  }
  l0 *= scale;
  for (std::size_t a = 0; a < n_attacks; ++a) {
    AttackTotals totals;
    totals.attack = cfg.attacks[a];
    totals.l0 = l0;
    for (const SampleLosses& s : per_sample) totals.la += s.la[a];
    totals.la *= scale;
    res.totals.push_back(totals);
    for (std::size_t p = 0; p < n_plans; ++p) {
      ExperimentRow row;
      row.scenario = cfg.scenario_class;
      row.metric = cfg.metric;
      row.attack = cfg.attacks[a];
      row.defense = plans[p].defense;
      row.k_d = plans[p].k_d;
      row.seed = cfg.seed;
      row.l0 = l0;
      row.la = totals.la;
      for (const SampleLosses& s : per_sample) row.ld += s.ld[a * n_plans + p];
      row.ld *= scale;
      try {
        row.dpr = dpr(row.l0, row.la, row.ld);
      } catch (const UndefinedDprError&) {
        row.dpr.reset();
      }
      row.wall_time = opts.record_time ? plans[p].seconds : 0.0;
      res.rows.push_back(std::move(row));
    }
  }
  return res;
}

ExperimentResult run_experiment(const ScenarioConfig& cfg,
                                const RunOptions& opts) {
  const PlanningResult planning = plan_defenses(cfg, opts);
  std::vector<EvalPlan> plans;
  plans.push_back({"none", 0, DefensePlan{}, 0.0});
  for (const PlannedDefense& pd : planning.plans) {
    EvalPlan ep;
    ep.defense = std::string(defense_name(pd.kind));
    ep.k_d = pd.k_d;
    ep.fixed = pd.plan;
    ep.seconds = pd.seconds;
    plans.push_back(std::move(ep));
  }
  return evaluate_plans(cfg, planning.loss, plans, opts);
}

std::vector<DamageCell> damage_table(std::span<const ScenarioConfig> cfgs,
                                     const RunOptions& opts) {
  std::vector<DamageCell> cells;
  for (const ScenarioConfig& cfg : cfgs) {
    cfg.validate();
    const GraphSource source(cfg.source);
    const std::vector<AttackerTypeSample> planning = draw_all(
        cfg, source, kPlanningStream, cfg.num_planning_samples, opts.jobs);
    const LossParams loss = resolve_loss(cfg, planning);
    const ExperimentResult r = evaluate_plans(cfg, loss, {}, opts);
    for (const AttackTotals& t : r.totals) {
      cells.push_back({cfg.scenario_class, cfg.metric, t.attack, t.l0, t.la,
                       t.percent_damage()});
    }
  }
  return cells;
}

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << "scenario_class,metric,attack,defense,k_D,seed,l0,la,ld,dpr,"
         "wall_time\n";
  for (const ExperimentRow& r : rows) {
    out << scenario_name(r.scenario) << ',' << metric_name(r.metric) << ','
        << attack_name(r.attack) << ',' << r.defense << ',' << r.k_d << ','
        << r.seed << ',' << fmt(r.l0) << ',' << fmt(r.la) << ',' << fmt(r.ld)
        << ',' << (r.dpr ? fmt(*r.dpr) : "undefined") << ','
        << fmt(r.wall_time) << '\n';
  }
}

void write_damage_csv(std::ostream& out, std::span<const DamageCell> cells) {
  out << "scenario_class,metric,attack,l0,la,percent_damage\n";
  for (const DamageCell& c : cells) {
    out << scenario_name(c.scenario) << ',' << metric_name(c.metric) << ','
        << attack_name(c.attack) << ',' << fmt(c.l0) << ',' << fmt(c.la) << ','
        << fmt(c.percent) << '\n';
  }
}

}  // namespace rlp
