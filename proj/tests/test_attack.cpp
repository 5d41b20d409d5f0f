#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "rlp/attack.hpp"
#include "rlp/verify.hpp"
#include "support.hpp"

namespace rlp {
namespace {

DamageGraph tuples_graph(std::vector<DamageTuple> tuples, std::size_t d1,
                         std::size_t d2) {
  DamageGraph dg;
  dg.v1 = 0;
  dg.v2 = 1;
  dg.deg1 = d1;
  dg.deg2 = d2;
  dg.tuples = std::move(tuples);
  return dg;
}

bool has(const AttackPlan& p, NodePair e) {
  return std::find(p.deletions.begin(), p.deletions.end(), e) !=
         p.deletions.end();
}

TEST(LinkDel, ProtectionRules) {
  DamageTuple both{2, 1.0, 2.0, true, true};
  DamageTuple one{3, -5.0, 7.0, true, false};
  DamageTuple open{4, 3.0, -1.0};
  const DamageGraph dg = tuples_graph({both, one, open}, 4, 4);
  const AttackPlan p = linkdel(dg, MetricKind::kCommonNeighbors);
  EXPECT_EQ(p.deletions, (std::vector<NodePair>{{1, 3}, {1, 4}}));
  EXPECT_THROW(linkdel(dg, MetricKind::kCommonNeighbors, 1),
               UnsupportedBudgetError);
}

TEST(LinkDel, SymmetricTiesGoToV1) {
  const DamageGraph dg = tuples_graph({{2, 0.5, 0.5}}, 2, 2);
  EXPECT_TRUE(has(linkdel(dg, MetricKind::kResourceAllocation), {0, 2}));
}

// Salton with d(V1)=6, d(V2)=3 and three critical tuples: every per-tuple
// choice is enumerated on the explicit graph.
TEST(LinkDel, SaltonMatchesEnumeration) {
  std::vector<NodePair> edges;
  for (NodeId w = 2; w <= 4; ++w) {
    edges.emplace_back(0, w);
    edges.emplace_back(1, w);
  }
  for (NodeId w = 5; w <= 7; ++w) edges.emplace_back(0, w);
  const Graph g = Graph::from_edges(8, edges);
  ASSERT_EQ(g.degree(0), 6u);
  ASSERT_EQ(g.degree(1), 3u);
  const DamageGraph dg =
      tuples_graph({{2, 0.3, 0.1}, {3, -0.2, 0.4}, {4, 0.0, 0.05}}, 6, 3);
  const AttackPlan plan = linkdel(dg, MetricKind::kSalton);

  double best_sim = std::numeric_limits<double>::infinity();
  double best_c = 0.0;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<NodePair> cut;
    double c = 0.0;
    for (int i = 0; i < 3; ++i) {
      const DamageTuple& t = dg.tuples[i];
      const bool v1 = mask >> i & 1;
      cut.push_back(v1 ? dg.edge1(t) : dg.edge2(t));
      c += v1 ? t.c1 : t.c2;
    }
    const double s = test::formula_similarity(
        MetricKind::kSalton, test::adj_sets(delete_edges(g, cut)), 0, 1);
    if (s < best_sim - 1e-12) {
      best_sim = s;
      best_c = c;
    } else if (std::abs(s - best_sim) <= 1e-12) {
      best_c = std::min(best_c, c);
    }
  }
  EXPECT_NEAR(similarity(MetricKind::kSalton, GraphView(g, plan.deletions), 0, 1),
              best_sim, 1e-12);
  EXPECT_NEAR(plan_damage(dg, plan), best_c, 1e-12);
}

TEST(PartitionCounts, HandExamples) {
  // HDI with equal degrees: both one-sided splits maximize max(d1', d2').
  EXPECT_EQ(optimal_partition_candidates(MetricKind::kHubDepressed, 5, 5, 4, 0,
                                         4),
            (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(optimal_partition_counts(MetricKind::kHubDepressed, 5, 5, 4, 1, 4),
            (PartitionCounts{0, 4}));
  // Salton with equal degrees: balanced split.
  for (std::size_t k = 1; k <= 6; ++k) {
    const PartitionCounts pc =
        optimal_partition_counts(MetricKind::kSalton, 8, 8, 6, 1, k);
    EXPECT_EQ(pc.k1, k / 2) << k;
  }
  EXPECT_EQ(optimal_partition_counts(MetricKind::kLeichtHolmeNewman, 7, 6, 5,
                                     0, 5),
            (PartitionCounts{0, 5}));
  EXPECT_THROW(optimal_partition_counts(MetricKind::kCommonNeighbors, 3, 3, 2,
                                        0, 2),
               std::invalid_argument);
  EXPECT_THROW(optimal_partition_counts(MetricKind::kSalton, 3, 3, 2, 0, 3),
               std::invalid_argument);
}

TEST(PartitionCountsProperty, MatchesExplicitGraph) {
  Rng rng(31);
  const MetricKind asym[] = {MetricKind::kSalton, MetricKind::kHubPromoted,
                             MetricKind::kHubDepressed,
                             MetricKind::kLeichtHolmeNewman};
  for (int i = 0; i < 300; ++i) {
    const MetricKind m = asym[rng.uniform_below(4)];
    const std::size_t after = rng.uniform_below(5);
    const std::size_t critical = rng.uniform_below(8);
    const std::size_t d1 = after + critical + rng.uniform_below(7);
    const std::size_t d2 = after + critical + rng.uniform_below(7);
    EXPECT_EQ(optimal_partition_counts(m, d1, d2, after + critical, after,
                                       critical)
                  .k1,
              test::brute_partition(m, d1, d2, after, critical))
        << metric_name(m) << " d1=" << d1 << " d2=" << d2 << " after=" << after
        << " critical=" << critical;
  }
}

TEST(LinkDelProperty, AgainstBruteForce) {
  const SuiteReport r = verify_attacks(60, 4242);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(LinkDelProperty, PlanShape) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const AttackInstance inst = random_attack_instance(rng);
    for (MetricKind m : kAllMetrics) {
      const DamageGraph dg = build_damage_graph(inst.graph, inst.h_a,
                                                inst.targets, m, inst.params,
                                                inst.plan);
      const AttackPlan p = linkdel(dg, m);
      for (const NodePair& e : p.deletions) EXPECT_FALSE(inst.plan.protects(e));
      for (const DamageTuple& t : dg.tuples) {
        EXPECT_FALSE(has(p, dg.edge1(t)) && has(p, dg.edge2(t)));
      }
      const GraphView after(inst.graph, p.deletions);
      EXPECT_EQ(common_neighbors(after, 0, 1).size(), dg.both_protected_count());
    }
  }
}

TEST(UnbiasedDel, RulesAndFrequency) {
  Rng rng(1);
  const DamageGraph fixed =
      tuples_graph({{2, 1, 1, true, true}, {3, 1, 1, false, true}}, 3, 3);
  EXPECT_EQ(unbiased_del(fixed, rng).deletions,
            (std::vector<NodePair>{{0, 3}}));

  const DamageGraph one = tuples_graph({{2, 1, 1}}, 2, 2);
  const int trials = 10000;
  int v1 = 0;
  for (int i = 0; i < trials; ++i) v1 += has(unbiased_del(one, rng), {0, 2});
  EXPECT_NEAR(v1 / double(trials), 0.5, 0.015);
}

TEST(UnbiasedDel, CoinsIgnoreProtection) {
  const DamageGraph open = tuples_graph({{2, 1, 1}, {3, 1, 1}, {4, 1, 1}}, 4, 4);
  DamageGraph guarded = open;
  guarded.tuples[0].prot1 = guarded.tuples[0].prot2 = true;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng a(s), b(s);
    const AttackPlan pa = unbiased_del(open, a);
    const AttackPlan pb = unbiased_del(guarded, b);
    EXPECT_EQ(a.next_u64(), b.next_u64());
    for (const NodePair& e : pb.deletions) EXPECT_TRUE(has(pa, e));
  }
}

TEST(RandDel, Extremes) {
  DamageGraph dg = tuples_graph({{2, 1, 1, true, false}, {3, 1, 1}}, 3, 3);
  Rng rng(2);
  EXPECT_TRUE(rand_del(dg, 0.0, rng).deletions.empty());
  EXPECT_EQ(rand_del(dg, 1.0, rng).deletions,
            (std::vector<NodePair>{{0, 3}, {1, 2}, {1, 3}}));
  EXPECT_THROW(rand_del(dg, 1.5, rng), std::invalid_argument);
}

TEST(RandDel, MeanDeletions) {
  const DamageGraph dg = tuples_graph({{2, 1, 1}, {3, 1, 1}}, 3, 3);
  Rng rng(3);
  const int trials = 10000;
  double total = 0;
  for (int i = 0; i < trials; ++i) total += rand_del(dg, 0.5, rng).deletions.size();
  EXPECT_NEAR(total / trials, 2.0, 0.05);
}

TEST(Attack, NamesAndDispatch) {
  for (AttackKind k :
       {AttackKind::kLinkDel, AttackKind::kUnbiasedDel, AttackKind::kRandDel}) {
    EXPECT_EQ(parse_attack(attack_name(k)), k);
  }
  EXPECT_THROW(parse_attack("add"), std::invalid_argument);
  const DamageGraph dg = tuples_graph({{2, 1, 1}}, 2, 2);
  Rng rng(0);
  EXPECT_EQ(run_attack(AttackKind::kRandDel, dg, MetricKind::kCommonNeighbors,
                       rng, {0.0})
                .deletions.size(),
            0u);
}

}  // namespace
}  // namespace rlp
