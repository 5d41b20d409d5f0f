#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rlp/edge_list.hpp"
#include "rlp/graph.hpp"
#include "support.hpp"

namespace rlp {
namespace {

Graph path3() { return Graph::from_edges(3, std::vector<NodePair>{{0, 1}, {1, 2}}); }

Graph complete(std::size_t n) {
  std::vector<NodePair> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

TEST(NodePair, CanonicalOrder) {
  NodePair p(5, 2);
  EXPECT_EQ(p.a(), 2u);
  EXPECT_EQ(p.b(), 5u);
  EXPECT_EQ(p, NodePair(2, 5));
  EXPECT_EQ(p.other(2), 5u);
  EXPECT_THROW(NodePair(3, 3), std::invalid_argument);
}

TEST(Graph, Degree) {
  EXPECT_EQ(path3().degree(1), 2u);
  EXPECT_EQ(Graph(4).degree(3), 0u);
  const Graph k5 = complete(5);
  for (NodeId u = 0; u < 5; ++u) EXPECT_EQ(k5.degree(u), 4u);
  EXPECT_THROW(path3().degree(3), std::invalid_argument);
}

TEST(Graph, FromEdgesMergesDuplicatesAndRejectsBadIds) {
  const Graph g =
      Graph::from_edges(3, std::vector<NodePair>{{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_THROW(Graph::from_edges(2, std::vector<NodePair>{{0, 2}}),
               std::invalid_argument);
}

TEST(Graph, CommonNeighbors) {
  EXPECT_EQ(common_neighbors(path3(), 0, 2), std::vector<NodeId>{1});
  const Graph two = Graph::from_edges(4, std::vector<NodePair>{{0, 1}, {2, 3}});
  EXPECT_TRUE(common_neighbors(two, 0, 3).empty());
  EXPECT_EQ(common_neighbors(complete(4), 0, 1), (std::vector<NodeId>{2, 3}));
  EXPECT_THROW(common_neighbors(path3(), 1, 1), std::invalid_argument);
}

TEST(Graph, DeleteEdges) {
  const Graph tri = complete(3);
  const std::vector<NodePair> cut{{0, 2}};
  EXPECT_EQ(delete_edges(tri, cut), path3());
  EXPECT_EQ(delete_edges(tri, {}), tri);
  const std::vector<NodePair> non_edge{{0, 2}};
  EXPECT_EQ(delete_edges(path3(), non_edge), path3());
}

TEST(Graph, ViewMatchesDeletion) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng.uniform_below(10);
    const Graph g = Graph::from_edges(n, test::random_edges(rng, n, 0.4));
    std::vector<NodePair> all = g.edges();
    std::vector<NodePair> removed;
    for (const NodePair& e : all)
      if (rng.bernoulli(0.3)) removed.push_back(e);
    removed.emplace_back(0, 1);  // may be a non-edge
    const Graph h = delete_edges(g, removed);
    const GraphView view(g, removed);
    for (NodeId u = 0; u < n; ++u) {
      EXPECT_EQ(view.degree(u), h.degree(u));
      for (NodeId v = 0; v < n; ++v) {
        if (u == v) continue;
        EXPECT_EQ(view.has_edge(u, v), h.has_edge(u, v));
        EXPECT_EQ(common_neighbors(view, u, v), common_neighbors(h, u, v));
      }
    }
  }
}

TEST(GraphProperty, NeighborhoodInvariants) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(12);
    const Graph g = Graph::from_edges(n, test::random_edges(rng, n, 0.35));
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        const auto uv = common_neighbors(g, u, v);
        EXPECT_EQ(uv, common_neighbors(g, v, u));
        EXPECT_LE(uv.size(), std::min(g.degree(u), g.degree(v)));
      }
    }
    std::vector<NodePair> removed;
    for (const NodePair& e : g.edges())
      if (rng.bernoulli(0.5)) removed.push_back(e);
    const Graph h = delete_edges(g, removed);
    for (NodeId u = 0; u < n; ++u) {
      std::size_t incident = 0;
      for (const NodePair& e : removed) incident += e.contains(u);
      EXPECT_EQ(h.degree(u), g.degree(u) - incident);
    }
  }
}

TEST(TwoHop, Examples) {
  // x=0, y=1, w=2 common; 3 hangs off w; 4-5 far away.
  const Graph g = Graph::from_edges(
      6, std::vector<NodePair>{{0, 2}, {1, 2}, {2, 3}, {4, 5}});
  const std::vector<NodePair> cand{{0, 1}};
  EXPECT_TRUE(two_hop_affected_pairs(g, {4, 5}, cand).empty());
  EXPECT_EQ(two_hop_affected_pairs(g, {0, 2}, cand).size(), 1u);
  EXPECT_EQ(two_hop_affected_pairs(g, {2, 3}, cand).size(), 1u);
  const double before = similarity(MetricKind::kAdamicAdar, g, 0, 1);
  const std::vector<NodePair> cut{{2, 3}};
  const double after =
      similarity(MetricKind::kAdamicAdar, GraphView(g, cut), 0, 1);
  EXPECT_NE(before, after);
}

TEST(TwoHopProperty, ExcludedPairsNeverChange) {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.uniform_below(10);
    const Graph g = Graph::from_edges(n, test::random_edges(rng, n, 0.35));
    if (g.num_edges() == 0) continue;
    std::vector<NodePair> cand;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) cand.emplace_back(u, v);
    for (const NodePair& e : g.edges()) {
      const auto hit = two_hop_affected_pairs(g, e, cand);
      const std::vector<NodePair> cut{e};
      const GraphView after(g, cut);
      for (const NodePair& p : cand) {
        if (std::binary_search(hit.begin(), hit.end(), p)) continue;
        for (MetricKind m : kAllMetrics) {
          EXPECT_EQ(similarity(m, g, p.a(), p.b()),
                    similarity(m, after, p.a(), p.b()));
        }
      }
    }
  }
}

TEST(Graph, InducedSubgraphAndComponents) {
  const Graph g = Graph::from_edges(
      7, std::vector<NodePair>{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}, {5, 6}});
  EXPECT_EQ(largest_component(g), (std::vector<NodeId>{3, 4, 5, 6}));
  const std::vector<NodeId> keep{5, 3, 6};
  const Graph s = induced_subgraph(g, keep);
  EXPECT_EQ(s.num_nodes(), 3u);
  EXPECT_TRUE(s.has_edge(0, 1));
  EXPECT_TRUE(s.has_edge(0, 2));
  EXPECT_FALSE(s.has_edge(1, 2));
}

TEST(EdgeList, ReadCompactsIdsAndSkipsComments) {
  std::istringstream in("# header\n10 20\n\n20 30\n30 10\n10 10\n20 10\n");
  const LoadedGraph lg = read_edge_list(in);
  EXPECT_EQ(lg.graph.num_nodes(), 3u);
  EXPECT_EQ(lg.graph.num_edges(), 3u);
  EXPECT_EQ(lg.original_ids, (std::vector<std::uint64_t>{10, 20, 30}));
}

TEST(EdgeList, BadLineReportsLineNumber) {
  std::istringstream in("1 2\n3 x\n");
  try {
    read_edge_list(in);
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(EdgeList, DenseRoundTripKeepsIsolatedNodes) {
  const auto dir = std::filesystem::temp_directory_path() / "rlp_edge_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "g.txt";
  const std::vector<NodePair> edges{{2, 0}, {0, 1}};
  write_edge_list(path, edges, 5);
  const Graph g = read_dense_graph(path);
  EXPECT_EQ(g.num_nodes(), 5u);
  EXPECT_EQ(g.edges(), (std::vector<NodePair>{{0, 1}, {0, 2}}));
  EXPECT_EQ(read_pair_list(path), g.edges());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rlp
