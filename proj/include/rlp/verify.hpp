#pragma once

// Randomized cross-checks of the fast components against the exhaustive
// oracles. Shared by the `verify` command and the test suite.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rlp/damage.hpp"
#include "rlp/graph.hpp"
#include "rlp/ilp.hpp"
#include "rlp/loss.hpp"
#include "rlp/oracle.hpp"
#include "rlp/plans.hpp"
#include "rlp/rng.hpp"
#include "rlp/targets.hpp"

namespace rlp {

struct SuiteReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;
  bool passed() const { return failures == 0 && checked > 0; }
};

// A small attack instance: h_a = (0, 1) with `common` shared neighbors, some
// extra random edges, a random target set, and random protection of tuple
// edges.
struct AttackInstance {
  Graph graph;
  NodePair h_a{0, 1};
  TargetSet targets;
  DefensePlan plan;
  LossParams params;
};

// At most max_deletable unprotected tuple edges.
AttackInstance random_attack_instance(Rng& rng,
                                      std::size_t max_deletable = 12);

// Random damage graphs drawn over a small shared node pool so that tuple
// edges recur across samples; at most max_edges distinct tuple edges.
std::vector<DamageGraph> random_damage_graphs(Rng& rng,
                                              std::size_t max_samples = 5,
                                              std::size_t max_edges = 16);

// Random program with 1..max_vars variables, mixed-sign coefficients, and a
// random budget.
BinaryProgram random_program(Rng& rng, std::size_t max_vars = 18);

// Random simple graph on `n` nodes with edge probability p.
Graph random_graph(Rng& rng, std::size_t n, double p);

// linkdel versus brute_attack for every metric: equal post-attack similarity
// (relative 1e-12), and linkdel's damage equal to the smallest
// independent damage among one-per-tuple minimizers (relative 1e-9 of the
// loss scale). Diagnostic rows are appended when `diagnostics` is given.
SuiteReport verify_attacks(std::size_t instances, std::uint64_t seed,
                           std::vector<DiagnosticRow>* diagnostics = nullptr);

// solve() versus brute_solve(): Optimal status, gap <= 1e-9, and reported
// objective equal to re-evaluation within 1e-9.
SuiteReport verify_ilp(std::size_t instances, std::size_t max_vars,
                       std::uint64_t seed);

// idopt's expected damage versus brute_defense_cheaper_side's, gap <= 1e-9.
SuiteReport verify_defenses(std::size_t instances, std::uint64_t seed);

// verify_gadget on every graph with at most `exhaustive_max` nodes and on
// `random_instances` random graphs with up to `random_max` nodes.
SuiteReport verify_gadgets(std::size_t exhaustive_max,
                           std::size_t random_instances,
                           std::size_t random_max, std::uint64_t seed);

}  // namespace rlp
