#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "rlp/experiment.hpp"
#include "rlp/parallel.hpp"

namespace rlp {
namespace {

ScenarioConfig small_config() {
  ScenarioConfig cfg;
  cfg.source.n = 60;
  cfg.source.m_attach = 3;
  cfg.vd_size = 6;
  cfg.seed = 11;
  cfg.num_planning_samples = 12;
  cfg.num_eval_attacks = 20;
  cfg.loss.beta = 0.1;
  cfg.budgets = {4, 12};
  cfg.attacks = {AttackKind::kLinkDel, AttackKind::kUnbiasedDel,
                 AttackKind::kRandDel};
  cfg.solver.max_nodes = 2000;
  return cfg;
}

std::string csv(const ExperimentResult& r) {
  std::ostringstream out;
  write_csv(out, r.rows);
  return out.str();
}

TEST(Experiment, RowsAndNoneBaseline) {
  const ScenarioConfig cfg = small_config();
  const ExperimentResult r = run_experiment(cfg);
  // Per attack: none, then idopt/idrank/ppn at two budgets.
  ASSERT_EQ(r.rows.size(), 3u * 7);
  ASSERT_EQ(r.totals.size(), 3u);
  for (const ExperimentRow& row : r.rows) {
    if (row.defense == "none") {
      EXPECT_EQ(row.k_d, 0u);
      EXPECT_EQ(row.ld, row.la);
      ASSERT_TRUE(row.dpr.has_value());
      EXPECT_EQ(*row.dpr, 0.0);
    }
    if (row.dpr) {
      EXPECT_NEAR(*row.dpr, (row.la - row.ld) / (row.la - row.l0), 1e-9);
    }
    EXPECT_EQ(row.wall_time, 0.0);
    EXPECT_EQ(row.seed, cfg.seed);
  }
  EXPECT_EQ(r.rows[0].attack, AttackKind::kLinkDel);
  EXPECT_EQ(r.rows[7].attack, AttackKind::kUnbiasedDel);
}

TEST(Experiment, FullProtectionRestoresBaseline) {
  const ScenarioConfig cfg = small_config();
  std::vector<NodePair> all;
  for (NodeId u = 0; u < cfg.vd_size; ++u) {
    for (NodeId w = 0; w < cfg.sample_nodes(); ++w) {
      if (w != u) all.emplace_back(u, w);
    }
  }
  canonicalize(all);
  const PlanningResult planning = plan_defenses(cfg);
  const std::vector<EvalPlan> plans{
      {"all", all.size(), DefensePlan::make(all, all.size()), 0.0}};
  const ExperimentResult r = evaluate_plans(cfg, planning.loss, plans);
  for (const ExperimentRow& row : r.rows) {
    EXPECT_EQ(row.ld, row.l0);
    ASSERT_TRUE(row.dpr.has_value());
    EXPECT_NEAR(*row.dpr, 1.0, 1e-12);
  }
}

TEST(Experiment, JobsDoNotChangeOutput) {
  const ScenarioConfig cfg = small_config();
  RunOptions serial;
  RunOptions threaded;
  threaded.jobs = 4;
  EXPECT_EQ(csv(run_experiment(cfg, serial)), csv(run_experiment(cfg, threaded)));
}

TEST(Experiment, CsvShape) {
  ExperimentRow row;
  row.defense = "idrank";
  row.k_d = 3;
  row.l0 = 1;
  row.la = 2;
  row.ld = 1.5;
  row.dpr = 0.5;
  ExperimentRow undef = row;
  undef.dpr.reset();
  std::ostringstream out;
  const std::vector<ExperimentRow> rows{row, undef};
  write_csv(out, rows);
  EXPECT_EQ(out.str(),
            "scenario_class,metric,attack,defense,k_D,seed,l0,la,ld,dpr,"
            "wall_time\n"
            "TCA,cn,linkdel,idrank,3,0,1,2,1.5,0.5,0\n"
            "TCA,cn,linkdel,idrank,3,0,1,2,1.5,undefined,0\n");
}

TEST(Experiment, UndefinedWhenAttackDoesNothing) {
  ScenarioConfig cfg = small_config();
  cfg.attacks = {AttackKind::kRandDel};
  cfg.randdel_p = 0.0;
  cfg.defenses = {DefenseKind::kIdRank};
  const ExperimentResult r = run_experiment(cfg);
  for (const ExperimentRow& row : r.rows) EXPECT_FALSE(row.dpr.has_value());
  EXPECT_NE(csv(r).find("undefined"), std::string::npos);
}

TEST(Experiment, PlanningShape) {
  const ScenarioConfig cfg = small_config();
  const PlanningResult p = plan_defenses(cfg);
  EXPECT_EQ(p.samples.size(), cfg.num_planning_samples);
  EXPECT_EQ(p.damage_graphs.size(), cfg.num_planning_samples);
  EXPECT_EQ(p.h_a_in_hd, cfg.num_planning_samples);  // targeted class
  ASSERT_EQ(p.plans.size(), 6u);
  for (const PlannedDefense& pd : p.plans) {
    EXPECT_LE(pd.plan.size(), pd.k_d);
    if (pd.kind == DefenseKind::kPpn) {
      EXPECT_EQ(pd.plan.size(), std::min(pd.k_d, p.ppn_pool));
    }
  }
  // IdOpt never loses to IdRank on the planning objective.
  for (std::size_t b = 0; b < 2; ++b) {
    EXPECT_LE(p.plans[b].expected_damage, p.plans[2 + b].expected_damage + 1e-9);
  }
}

TEST(Experiment, DrawSampleDeterministic) {
  const ScenarioConfig cfg = small_config();
  const GraphSource src(cfg.source);
  const AttackerTypeSample a = draw_sample(cfg, src, kEvaluationStream, 5);
  const AttackerTypeSample b = draw_sample(cfg, src, kEvaluationStream, 5);
  const AttackerTypeSample c = draw_sample(cfg, src, kPlanningStream, 5);
  EXPECT_EQ(a.sample.graph, b.sample.graph);
  EXPECT_EQ(a.h_a, b.h_a);
  EXPECT_FALSE(a.sample.graph == c.sample.graph && a.h_a == c.h_a);
}

TEST(Experiment, DamageTableSign) {
  const ScenarioConfig cfg = small_config();
  const std::vector<ScenarioConfig> cfgs{cfg};
  const std::vector<DamageCell> cells = damage_table(cfgs);
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_GT(cells[0].la, cells[0].l0);
  EXPECT_NEAR(cells[0].percent, 100 * (cells[0].la - cells[0].l0) / cells[0].l0,
              1e-9);
}

TEST(ParallelFor, RethrowsAndCovers) {
  std::vector<int> hit(100, 0);
  parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(50, 4,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("x");
                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace rlp
