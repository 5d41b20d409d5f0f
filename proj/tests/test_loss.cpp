#include <gtest/gtest.h>

#include <cmath>

#include "rlp/loss.hpp"
#include "support.hpp"

namespace rlp {
namespace {

LossParams params(double beta, double theta) {
  LossParams p;
  p.beta = beta;
  p.theta = theta;
  return p;
}

TEST(PairLoss, ClosedForms) {
  EXPECT_EQ(pair_loss(0.7, +1, params(3, 0.7)), 1.0);
  EXPECT_EQ(pair_loss(0.7, -1, params(3, 0.7)), 1.0);
  EXPECT_NEAR(pair_loss(std::log(2.0), +1, params(1, 0)), 0.5, 1e-15);
  EXPECT_NEAR(pair_loss(0.5, -1, params(2, 0)), std::exp(1.0), 1e-15);
}

TEST(PairLoss, Monotone) {
  const LossParams p = params(1.3, 0.4);
  for (double s = 0.0; s < 5.0; s += 0.05) {
    EXPECT_LT(pair_loss(s + 0.01, +1, p), pair_loss(s, +1, p));
    EXPECT_GT(pair_loss(s + 0.01, -1, p), pair_loss(s, -1, p));
    EXPECT_GT(pair_loss(s, +1, p), 0.0);
  }
}

// Star 0-{1,2,3}, plus 3-4. Targets {1,2,3}: pairs (1,2),(1,3),(2,3), all
// non-edges, with CN 1, 1, 1.
TEST(TotalLoss, HandInstance) {
  const Graph g = Graph::from_edges(
      5, std::vector<NodePair>{{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  const TargetSet t = TargetSet::from_graph(g, {1, 2, 3});
  const LossParams p = params(0.5, 2.0);
  const double term = std::exp(0.5 * (1.0 - 2.0));
  EXPECT_NEAR(total_loss(g, t, MetricKind::kCommonNeighbors, p), 3 * term,
              1e-14);
  const TargetSet one = TargetSet::from_graph(g, {0, 3});  // an edge, CN 0
  EXPECT_NEAR(total_loss(g, one, MetricKind::kCommonNeighbors, p),
              pair_loss(0.0, +1, p), 1e-15);
  const TargetSet none = TargetSet::from_graph(g, {4});
  EXPECT_EQ(total_loss(g, none, MetricKind::kCommonNeighbors, p), 0.0);
}

TEST(TotalLossProperty, MatchesScratchAfterDeletions) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng.uniform_below(10);
    const Graph g = Graph::from_edges(n, test::random_edges(rng, n, 0.4));
    std::vector<NodeId> nodes;
    for (NodeId u = 0; u < n; ++u)
      if (rng.bernoulli(0.5)) nodes.push_back(u);
    const LossParams p = params(0.5 + rng.uniform01(), rng.uniform01());
    std::vector<NodePair> removed;
    for (const NodePair& e : g.edges())
      if (rng.bernoulli(0.3)) removed.push_back(e);
    const Graph h = delete_edges(g, removed);
    const TargetSet t = TargetSet::from_graph(g, nodes);
    const test::AdjSets adj = test::adj_sets(h);
    for (MetricKind m : kAllMetrics) {
      double expect = 0.0;
      for (std::size_t i = 0; i < t.pairs.size(); ++i) {
        const double s =
            test::formula_similarity(m, adj, t.pairs[i].a(), t.pairs[i].b());
        expect += std::exp(-t.labels[i] * p.beta * (s - p.theta));
      }
      EXPECT_TRUE(test::close_rel(total_loss(GraphView(g, removed), t, m, p),
                                  expect, 1e-12));
    }
  }
}

TEST(AverageLoss, Means) {
  const Graph g = Graph::from_edges(3, std::vector<NodePair>{{0, 1}, {1, 2}});
  const LabeledGraph a{g, TargetSet::from_graph(g, {0, 2})};
  const Graph h = Graph::from_edges(3, std::vector<NodePair>{{0, 2}});
  const LabeledGraph b{h, TargetSet::from_graph(h, {0, 2})};
  const LossParams p = params(1, 0);
  const double la = total_loss(a.graph, a.targets, MetricKind::kCommonNeighbors, p);
  const double lb = total_loss(b.graph, b.targets, MetricKind::kCommonNeighbors, p);
  const std::vector<LabeledGraph> one{a}, same{a, a}, three{a, b, b};
  EXPECT_EQ(average_loss(one, MetricKind::kCommonNeighbors, p), la);
  EXPECT_EQ(average_loss(same, MetricKind::kCommonNeighbors, p), la);
  EXPECT_NEAR(average_loss(three, MetricKind::kCommonNeighbors, p),
              (la + 2 * lb) / 3, 1e-15);
  EXPECT_THROW(average_loss({}, MetricKind::kCommonNeighbors, p),
               std::invalid_argument);
}

TEST(Dpr, Arithmetic) {
  EXPECT_EQ(dpr(10, 14, 14), 0.0);
  EXPECT_EQ(dpr(10, 14, 10), 1.0);
  EXPECT_DOUBLE_EQ(dpr(10, 14, 11), 0.75);
  EXPECT_GT(dpr(10, 14, 9), 1.0);
  try {
    dpr(3.0, 3.0, 2.0);
    FAIL();
  } catch (const UndefinedDprError& e) {
    EXPECT_EQ(e.l0(), 3.0);
    EXPECT_EQ(e.la(), 3.0);
  }
}

TEST(DprProperty, ScaleInvariant) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const double l0 = 1 + rng.uniform01();
    const double la = l0 + 0.1 + rng.uniform01();
    const double ld = l0 + 2 * rng.uniform01();
    const double k = 0.01 + 100 * rng.uniform01();
    EXPECT_NEAR(dpr(l0, la, ld), dpr(k * l0, k * la, k * ld), 1e-9);
  }
}

TEST(CalibrateTheta, Midpoints) {
  // (0,1) is an edge with CN 1; (0,2) and (1,2) are non-edges with CN 0.
  const Graph g = Graph::from_edges(
      4, std::vector<NodePair>{{0, 1}, {0, 3}, {1, 3}});
  const std::vector<LabeledGraph> s{{g, TargetSet::from_graph(g, {0, 1, 2})}};
  EXPECT_DOUBLE_EQ(calibrate_theta(s, MetricKind::kCommonNeighbors), 0.5);

  // Equal means: every target pair has CN 1.
  const Graph c = Graph::from_edges(
      4, std::vector<NodePair>{{0, 1}, {0, 3}, {1, 3}, {2, 3}});
  const std::vector<LabeledGraph> eq{{c, TargetSet::from_graph(c, {0, 1, 2})}};
  EXPECT_DOUBLE_EQ(calibrate_theta(eq, MetricKind::kCommonNeighbors), 1.0);

  const Graph e(3);
  const std::vector<LabeledGraph> bad{{e, TargetSet::from_graph(e, {0, 1, 2})}};
  EXPECT_THROW(calibrate_theta(bad, MetricKind::kCommonNeighbors),
               std::invalid_argument);
}

}  // namespace
}  // namespace rlp
