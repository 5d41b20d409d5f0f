#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rlp/damage.hpp"
#include "rlp/defense.hpp"
#include "rlp/loss.hpp"
#include "rlp/plans.hpp"
#include "rlp/scenario.hpp"

namespace rlp {

// Seed streams; slot i of a stream is derive_seed(cfg.seed, stream, i).
enum SeedStream : std::uint64_t {
  kPlanningStream = 1,
  kEvaluationStream = 2,
  kPpnStream = 3,
  kAttackCoinStream = 4,
};

struct RunOptions {
  std::size_t jobs = 1;
  // Fill wall_time with planning seconds; off by default so that output is
  // byte-stable.
  bool record_time = false;
};

// Draws sample i of a stream.
AttackerTypeSample draw_sample(const ScenarioConfig& cfg,
                               const GraphSource& source, SeedStream stream,
                               std::size_t index);

// cfg.loss, with theta replaced by calibrate_theta() over the planning samples
// when cfg.auto_theta is set.
LossParams resolve_loss(const ScenarioConfig& cfg,
                        std::span<const AttackerTypeSample> planning);

struct PlannedDefense {
  DefenseKind kind = DefenseKind::kNone;
  std::size_t k_d = 0;
  DefensePlan plan;  // empty for none
  double expected_damage = 0.0;  // on the planning damage graphs
  double seconds = 0.0;
};

struct PlanningResult {
  LossParams loss;
  std::vector<AttackerTypeSample> samples;
  std::vector<DamageGraph> damage_graphs;
  std::vector<PlannedDefense> plans;  // config defense order, then budgets
  std::size_t h_a_in_hd = 0;  // planning samples whose h_a is a target pair
  std::size_t ppn_pool = 0;   // distinct critical edges over planning samples
};

PlanningResult plan_defenses(const ScenarioConfig& cfg,
                             const RunOptions& opts = {});

// A plan to evaluate. Without `fixed`, a fresh PPN plan of size k_d is drawn
// from each evaluation sample's critical edges.
struct EvalPlan {
  std::string defense;
  std::size_t k_d = 0;
  std::optional<DefensePlan> fixed;
  double seconds = 0.0;
};

struct ExperimentRow {
  ScenarioClass scenario = ScenarioClass::kTca;
  MetricKind metric = MetricKind::kCommonNeighbors;
  AttackKind attack = AttackKind::kLinkDel;
  std::string defense;
  std::size_t k_d = 0;
  std::uint64_t seed = 0;
  double l0 = 0.0;
  double la = 0.0;
  double ld = 0.0;
  std::optional<double> dpr;  // empty when la == l0
  double wall_time = 0.0;
};

// Mean losses over the evaluation samples for one attack.
struct AttackTotals {
  AttackKind attack = AttackKind::kLinkDel;
  double l0 = 0.0;
  double la = 0.0;
  // 100 (la - l0) / l0.
  double percent_damage() const;
};

struct ExperimentResult {
  double theta = 0.0;
  std::vector<AttackTotals> totals;  // config attack order
  std::vector<ExperimentRow> rows;   // attack, then plan order
  std::size_t eval_h_a_in_hd = 0;
};

// Simulates cfg.num_eval_attacks attacks per configured attack kind, one
// fresh sample each, against every plan. All plans see the same samples and
// the same attack coins.
ExperimentResult evaluate_plans(const ScenarioConfig& cfg,
                                const LossParams& loss,
                                std::span<const EvalPlan> plans,
                                const RunOptions& opts = {});

// Planning followed by evaluation. Rows: one "none" row (k_D = 0) per attack,
// then each configured defense at each budget.
ExperimentResult run_experiment(const ScenarioConfig& cfg,
                                const RunOptions& opts = {});

struct DamageCell {
  ScenarioClass scenario = ScenarioClass::kTca;
  MetricKind metric = MetricKind::kCommonNeighbors;
  AttackKind attack = AttackKind::kLinkDel;
  double l0 = 0.0;
  double la = 0.0;
  double percent = 0.0;
};

// Percent damage of each config's attacks with no defense.
std::vector<DamageCell> damage_table(std::span<const ScenarioConfig> cfgs,
                                     const RunOptions& opts = {});

// "scenario_class,metric,attack,defense,k_D,seed,l0,la,ld,dpr,wall_time"
void write_csv(std::ostream& out, std::span<const ExperimentRow> rows);
void write_damage_csv(std::ostream& out, std::span<const DamageCell> cells);

}  // namespace rlp
