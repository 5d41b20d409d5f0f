#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rlp/graph.hpp"
#include "rlp/loss.hpp"
#include "rlp/metrics.hpp"
#include "rlp/plans.hpp"
#include "rlp/targets.hpp"

namespace rlp {

// Which way a single-edge damage is measured. kAfterMinusBefore makes a
// positive damage mean the deletion raises the defender's loss; the attacker
// and defender rules assume it. kBeforeMinusAfter exists for auditing.
enum class DamageSign { kAfterMinusBefore, kBeforeMinusAfter };

std::string_view damage_sign_name(DamageSign s);
DamageSign parse_damage_sign(std::string_view name);

// One common neighbor w of the attack target (v1, v2) with the damage of
// deleting (v1, w) and (v2, w) on their own.
struct DamageTuple {
  NodeId w = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  bool prot1 = false;
  bool prot2 = false;

  bool both_protected() const { return prot1 && prot2; }
  bool both_open() const { return !prot1 && !prot2; }
};

struct DamageGraph {
  NodeId v1 = 0;
  NodeId v2 = 0;
  // Degrees of v1 and v2 in the sample graph.
  std::size_t deg1 = 0;
  std::size_t deg2 = 0;
  std::vector<DamageTuple> tuples;  // ascending w
  std::size_t sample_index = 0;

  NodePair edge1(const DamageTuple& t) const { return {v1, t.w}; }
  NodePair edge2(const DamageTuple& t) const { return {v2, t.w}; }
  NodePair target() const { return {v1, v2}; }

  // Tuples where both edges are deletable (the attacker must pick a side).
  std::size_t critical_count() const;
  // Tuples with at least one deletable edge.
  std::size_t deletable_tuple_count() const;
  std::size_t both_protected_count() const;

  nlohmann::json to_json() const;
};

// Damage graph for attack target `h_a` (v1 = h_a.a(), v2 = h_a.b()). Damages
// do not depend on `plan`; it only sets the protection flags. Only the target
// pairs whose similarity can change are re-evaluated for each deletion.
// Throws std::invalid_argument when h_a is not an edge of g.
DamageGraph build_damage_graph(const Graph& g, const NodePair& h_a,
                               const TargetSet& targets, MetricKind m,
                               const LossParams& params,
                               const DefensePlan& plan = {},
                               DamageSign sign = DamageSign::kAfterMinusBefore);

// Copy of `dg` with flags read from `plan`.
DamageGraph with_protection(DamageGraph dg, const DefensePlan& plan);

// Total damage of an attack under the independent-damage approximation.
// Throws std::invalid_argument for a deletion that is not a tuple edge.
double plan_damage(const DamageGraph& dg, const AttackPlan& attack);

}  // namespace rlp
