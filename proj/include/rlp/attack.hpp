#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rlp/damage.hpp"
#include "rlp/metrics.hpp"
#include "rlp/plans.hpp"
#include "rlp/rng.hpp"

namespace rlp {

// The attacker's budget cannot break every deletable tuple.
class UnsupportedBudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Deletions at v1 (k1) and at v2 (k2) among the critical tuples.
struct PartitionCounts {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  friend bool operator==(const PartitionCounts&,
                         const PartitionCounts&) = default;
};

// Every k1 in [0, critical] whose split minimizes the post-attack similarity
// common_after / f(d1 - k1, d2 - (critical - k1)), ascending. d1 and d2 are
// the endpoint degrees before the critical deletions. Splits within a relative
// 1e-12 of the minimum count as tied. Requires an asymmetric metric and
// critical <= n_common.
std::vector<std::size_t> optimal_partition_candidates(MetricKind m,
                                                      std::size_t d1,
                                                      std::size_t d2,
                                                      std::size_t n_common,
                                                      std::size_t common_after,
                                                      std::size_t critical);

// Smallest minimizing split.
PartitionCounts optimal_partition_counts(MetricKind m, std::size_t d1,
                                         std::size_t d2, std::size_t n_common,
                                         std::size_t common_after,
                                         std::size_t critical);

// Similarity-minimizing attack that breaks ties in the defender's favor under
// the independent-damage approximation. Every deletable tuple is broken with
// exactly one deletion: the open side of a half-protected tuple, and for
// critical tuples the lower-damage side (symmetric metrics, ties to v1) or the
// optimal split filled in ascending c1 - c2 order (asymmetric metrics; among
// tied splits the one with the smallest total damage). `k_attack` defaults to
// the number of common neighbors; a smaller budget than the number of
// deletable tuples throws UnsupportedBudgetError.
AttackPlan linkdel(const DamageGraph& dg, MetricKind m,
                   std::optional<std::size_t> k_attack = std::nullopt);

// Picks a side uniformly for each critical tuple. One coin is drawn per tuple
// whether or not it is used, so plans under different defenses share random
// numbers.
AttackPlan unbiased_del(const DamageGraph& dg, Rng& rng);

// Deletes each open tuple edge independently with probability p. Two coins
// are drawn per tuple regardless of protection.
AttackPlan rand_del(const DamageGraph& dg, double p, Rng& rng);

struct AttackOptions {
  double randdel_p = 0.5;
};

AttackPlan run_attack(AttackKind kind, const DamageGraph& dg, MetricKind m,
                      Rng& rng, const AttackOptions& options = {});

}  // namespace rlp
