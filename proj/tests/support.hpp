#pragma once

// Reference pieces written directly from the metric formulas with std::set,
// sharing no code with the library's own fast paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <set>
#include <vector>

#include "rlp/graph.hpp"
#include "rlp/metrics.hpp"
#include "rlp/rng.hpp"

namespace rlp::test {

using AdjSets = std::vector<std::set<NodeId>>;

inline AdjSets adj_sets(std::size_t n, const std::vector<NodePair>& edges) {
  AdjSets adj(n);
  for (const NodePair& e : edges) {
    adj[e.a()].insert(e.b());
    adj[e.b()].insert(e.a());
  }
  return adj;
}

inline AdjSets adj_sets(const Graph& g) {
  return adj_sets(g.num_nodes(), g.edges());
}

// Metric formula evaluated from fresh set operations.
inline double formula_similarity(MetricKind m, const AdjSets& adj, NodeId u,
                                 NodeId v) {
  std::set<NodeId> common;
  std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(),
                        adj[v].end(), std::inserter(common, common.end()));
  std::set<NodeId> uni;
  std::set_union(adj[u].begin(), adj[u].end(), adj[v].begin(), adj[v].end(),
                 std::inserter(uni, uni.end()));
  const double n = static_cast<double>(common.size());
  const double du = static_cast<double>(adj[u].size());
  const double dv = static_cast<double>(adj[v].size());
  auto ratio = [&](double den) { return den == 0.0 ? 0.0 : n / den; };
  switch (m) {
    case MetricKind::kCommonNeighbors:
      return n;
    case MetricKind::kAdamicAdar: {
      double s = 0.0;
      for (NodeId w : common) s += 1.0 / std::log(double(adj[w].size()));
      return s;
    }
    case MetricKind::kResourceAllocation: {
      double s = 0.0;
      for (NodeId w : common) s += 1.0 / double(adj[w].size());
      return s;
    }
    case MetricKind::kJaccard:
      return ratio(double(uni.size()));
    case MetricKind::kSorensen:
      return du + dv == 0.0 ? 0.0 : 2.0 * n / (du + dv);
    case MetricKind::kSalton:
      return ratio(std::sqrt(du * dv));
    case MetricKind::kHubPromoted:
      return ratio(std::min(du, dv));
    case MetricKind::kHubDepressed:
      return ratio(std::max(du, dv));
    case MetricKind::kLeichtHolmeNewman:
      return ratio(du * dv);
  }
  return 0.0;
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a),
                                                         std::abs(b)));
}

// Erdos-Renyi style edge list.
inline std::vector<NodePair> random_edges(Rng& rng, std::size_t n, double p) {
  std::vector<NodePair> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace rlp::test

namespace rlp::test {

// Split of `critical` deletions between the endpoints of (0, 1) found by
// building the graph and evaluating every split on it: 0 and 1 share
// common_after + critical neighbors and have degrees d1 and d2. Returns the
// smallest k1 within relative 1e-12 of the minimum.
inline std::size_t brute_partition(MetricKind m, std::size_t d1, std::size_t d2,
                                   std::size_t common_after,
                                   std::size_t critical) {
  const std::size_t shared = common_after + critical;
  std::vector<NodePair> edges;
  NodeId next = 2;
  std::vector<NodeId> crit;
  for (std::size_t i = 0; i < shared; ++i, ++next) {
    edges.emplace_back(0, next);
    edges.emplace_back(1, next);
    if (i >= common_after) crit.push_back(next);
  }
  for (std::size_t i = shared; i < d1; ++i) edges.emplace_back(0, next++);
  for (std::size_t i = shared; i < d2; ++i) edges.emplace_back(1, next++);
  std::vector<double> sims;
  for (std::size_t k1 = 0; k1 <= critical; ++k1) {
    std::vector<NodePair> kept;
    for (const NodePair& e : edges) {
      const NodeId w = e.other(e.contains(0) ? 0 : 1);
      const auto it = std::find(crit.begin(), crit.end(), w);
      if (it != crit.end()) {
        const bool v1_side = std::size_t(it - crit.begin()) < k1;
        if (v1_side == e.contains(0)) continue;
      }
      kept.push_back(e);
    }
    sims.push_back(formula_similarity(m, adj_sets(next, kept), 0, 1));
  }
  const double best = *std::min_element(sims.begin(), sims.end());
  for (std::size_t k1 = 0; k1 <= critical; ++k1) {
    if (sims[k1] <= best + 1e-12 * std::max(1.0, std::abs(best))) return k1;
  }
  return 0;
}

}  // namespace rlp::test
