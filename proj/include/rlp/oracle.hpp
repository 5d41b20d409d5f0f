#pragma once

// Exhaustive reference implementations. Everything here enumerates and is
// only meant for small instances; the guards throw OracleSizeError rather
// than run for hours.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "rlp/damage.hpp"
#include "rlp/graph.hpp"
#include "rlp/ilp.hpp"
#include "rlp/loss.hpp"
#include "rlp/metrics.hpp"
#include "rlp/plans.hpp"
#include "rlp/targets.hpp"

namespace rlp {

class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Whether the exhaustive attacker may delete both edges to one common
// neighbor.
enum class TupleRule { kUnrestricted, kOnePerTuple };

struct ExactAttackResult {
  double min_similarity = 0.0;
  // Every deletion set reaching min_similarity (relative tolerance 1e-12),
  // in enumeration order.
  std::vector<AttackPlan> optimal_plans;
  // Sum over the deleted edges of their single-edge loss change, each
  // recomputed from scratch; aligned with optimal_plans.
  std::vector<double> independent_damage;
  // Exact loss after the attack; aligned with optimal_plans.
  std::vector<double> exact_loss;
  // Index into optimal_plans with the smallest exact loss (first on ties).
  std::size_t defender_favorite = 0;

  double min_independent_damage() const;
};

// Tries every set of at most k_attack unprotected edges joining an endpoint
// of h_a to one of its common neighbors. Throws OracleSizeError above 20
// candidate edges and std::invalid_argument when h_a is not an edge.
ExactAttackResult brute_attack(const Graph& g, const NodePair& h_a,
                               const DefensePlan& plan, MetricKind m,
                               std::size_t k_attack, const TargetSet& targets,
                               const LossParams& params,
                               TupleRule rule = TupleRule::kUnrestricted);

struct BruteDefenseResult {
  DefensePlan plan;
  double objective = 0.0;
};

// Best protection set of at most k_D tuple edges against an attacker that
// breaks each tuple on its cheaper side (one protected edge forces the
// other). Objective is the summed damage over all damage graphs. Ties go to
// the lexicographically smallest set. Throws OracleSizeError above 16
// distinct candidate edges.
BruteDefenseResult brute_defense_cheaper_side(std::span<const DamageGraph> graphs,
                                       std::size_t k_d);

// One sample for the exact-attacker defense oracle.
struct OracleSample {
  Graph graph;
  NodePair h_a{0, 1};
  TargetSet targets;
};

// Same enumeration, but each sample is answered by brute_attack (one edge per
// tuple, ties toward the defender) and scored by the exact post-attack loss.
BruteDefenseResult brute_defense_exact(std::span<const OracleSample> samples,
                                       std::size_t k_d, MetricKind m,
                                       const LossParams& params);

// Minimum of the program over every budget-feasible assignment, visited in
// Gray-code order. Ties keep the first assignment met. Throws OracleSizeError
// above 22 variables.
Solution brute_solve(const BinaryProgram& program);

// The reduction instance built from a max-cut graph: the base nodes keep
// their ids, V1 and V2 are appended and joined to every base node, and the
// base edges become the target pairs (the lifted graph itself has no edges
// among base nodes).
struct GadgetInstance {
  Graph base_graph;
  Graph lifted;
  std::vector<NodePair> h_d;
  NodeId v1 = 0;
  NodeId v2 = 0;
};

// Throws std::invalid_argument for more than 8 base nodes.
GadgetInstance gadget_from_graph(const Graph& base);

struct GadgetVerdict {
  double min_sh = 0.0;  // smallest summed CN over h_d after a partition attack
  std::size_t maxcut = 0;
  bool consistent = false;  // min_sh == |E| - maxcut
};

GadgetVerdict verify_gadget(const GadgetInstance& inst);

// Compares the independent-damage estimate of an attack with its exact loss
// change on one instance.
struct DiagnosticRow {
  std::size_t instance = 0;
  double min_similarity = 0.0;
  double independent_damage = 0.0;
  double exact_damage = 0.0;
  double gap() const { return exact_damage - independent_damage; }
};

DiagnosticRow attack_diagnostic(std::size_t instance, const Graph& g,
                                const DamageGraph& dg,
                                const AttackPlan& attack, MetricKind m,
                                const TargetSet& targets,
                                const LossParams& params);

// Header "instance,min_similarity,independent_damage,exact_damage,gap".
void write_diagnostics_csv(std::ostream& out,
                           std::span<const DiagnosticRow> rows);

}  // namespace rlp
