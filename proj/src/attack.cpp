#include "rlp/attack.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

namespace rlp {

std::vector<std::size_t> optimal_partition_candidates(MetricKind m,
                                                      std::size_t d1,
                                                      std::size_t d2,
                                                      std::size_t n_common,
                                                      std::size_t common_after,
                                                      std::size_t critical) {
  if (metric_class(m) != MetricClass::kAsymmetric) {
    throw std::invalid_argument("optimal_partition_counts: metric '" +
                                std::string(metric_name(m)) +
                                "' is symmetric");
  }
  if (critical > n_common) {
    throw std::invalid_argument(
        "optimal_partition_counts: more critical tuples than common "
        "neighbors");
  }
  std::vector<double> sims(critical + 1);
  for (std::size_t k1 = 0; k1 <= critical; ++k1) {
    const std::size_t k2 = critical - k1;
    assert(k1 <= d1 && k2 <= d2);
    sims[k1] = similarity_from_counts(m, common_after, d1 - k1, d2 - k2);
  }
  const double best = *std::min_element(sims.begin(), sims.end());
  const double tol = 1e-12 * std::max(1.0, std::abs(best));
  std::vector<std::size_t> out;
  for (std::size_t k1 = 0; k1 <= critical; ++k1) {
    if (sims[k1] <= best + tol) out.push_back(k1);
  }
  return out;
}

PartitionCounts optimal_partition_counts(MetricKind m, std::size_t d1,
                                         std::size_t d2, std::size_t n_common,
                                         std::size_t common_after,
                                         std::size_t critical) {
  const std::size_t k1 = optimal_partition_candidates(
      m, d1, d2, n_common, common_after, critical)
                             .front();
  return {k1, critical - k1};
}

AttackPlan linkdel(const DamageGraph& dg, MetricKind m,
                   std::optional<std::size_t> k_attack) {
  const std::size_t budget = k_attack.value_or(dg.tuples.size());
  const std::size_t needed = dg.deletable_tuple_count();
  if (budget < needed) {
    throw UnsupportedBudgetError(
        "linkdel: budget " + std::to_string(budget) + " cannot break " +
        std::to_string(needed) + " deletable tuples");
  }

  AttackPlan plan;
  plan.kind = AttackKind::kLinkDel;
  std::vector<const DamageTuple*> critical;
  std::size_t forced1 = 0;
  std::size_t forced2 = 0;
  for (const DamageTuple& t : dg.tuples) {
    if (t.both_protected()) continue;
    if (t.prot1) {
      plan.deletions.push_back(dg.edge2(t));
      ++forced2;
    } else if (t.prot2) {
      plan.deletions.push_back(dg.edge1(t));
      ++forced1;
    } else {
      critical.push_back(&t);
    }
  }

  if (metric_class(m) == MetricClass::kSymmetric) {
    for (const DamageTuple* t : critical) {
      plan.deletions.push_back(t->c1 <= t->c2 ? dg.edge1(*t) : dg.edge2(*t));
    }
  } else if (!critical.empty()) {
    std::stable_sort(critical.begin(), critical.end(),
                     [](const DamageTuple* a, const DamageTuple* b) {
                       return a->c1 - a->c2 < b->c1 - b->c2;
                     });
    const auto candidates = optimal_partition_candidates(
        m, dg.deg1 - forced1, dg.deg2 - forced2, dg.tuples.size(),
        dg.both_protected_count(), critical.size());
    // Prefix sums of the greedy order give the damage of every split.
    double c2_total = 0.0;
    for (const DamageTuple* t : critical) c2_total += t->c2;
    std::vector<double> damage_at(critical.size() + 1, c2_total);
    for (std::size_t i = 0; i < critical.size(); ++i) {
      damage_at[i + 1] =
          damage_at[i] + (critical[i]->c1 - critical[i]->c2);
    }
    std::size_t k1 = candidates.front();
    for (std::size_t c : candidates) {
      if (damage_at[c] < damage_at[k1]) k1 = c;
    }
    for (std::size_t i = 0; i < critical.size(); ++i) {
      plan.deletions.push_back(i < k1 ? dg.edge1(*critical[i])
                                      : dg.edge2(*critical[i]));
    }
  }
  canonicalize(plan.deletions);
  return plan;
}

AttackPlan unbiased_del(const DamageGraph& dg, Rng& rng) {
  AttackPlan plan;
  plan.kind = AttackKind::kUnbiasedDel;
  for (const DamageTuple& t : dg.tuples) {
    const bool pick_v1 = rng.bernoulli(0.5);
    if (t.both_protected()) continue;
    if (t.prot1) {
      plan.deletions.push_back(dg.edge2(t));
    } else if (t.prot2) {
      plan.deletions.push_back(dg.edge1(t));
    } else {
      plan.deletions.push_back(pick_v1 ? dg.edge1(t) : dg.edge2(t));
    }
  }
  canonicalize(plan.deletions);
  return plan;
}

AttackPlan rand_del(const DamageGraph& dg, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("rand_del: p must be in [0, 1]");
  }
  AttackPlan plan;
  plan.kind = AttackKind::kRandDel;
  for (const DamageTuple& t : dg.tuples) {
    const bool del1 = rng.uniform01() < p;
    const bool del2 = rng.uniform01() < p;
    if (del1 && !t.prot1) plan.deletions.push_back(dg.edge1(t));
    if (del2 && !t.prot2) plan.deletions.push_back(dg.edge2(t));
  }
  canonicalize(plan.deletions);
  return plan;
}

AttackPlan run_attack(AttackKind kind, const DamageGraph& dg, MetricKind m,
                      Rng& rng, const AttackOptions& options) {
  switch (kind) {
    case AttackKind::kLinkDel: return linkdel(dg, m);
    case AttackKind::kUnbiasedDel: return unbiased_del(dg, rng);
    case AttackKind::kRandDel: return rand_del(dg, options.randdel_p, rng);
  }
  throw std::logic_error("run_attack: unknown attack");
}

}  // namespace rlp
