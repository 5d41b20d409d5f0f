#pragma once

#include <span>
#include <vector>

#include "rlp/graph.hpp"

namespace rlp {

// The analyst's target nodes V_D, every pair among them (H_D), and the true
// label of each pair in one sample graph.
struct TargetSet {
  std::vector<NodeId> nodes;    // ascending
  std::vector<NodePair> pairs;  // all C(|nodes|, 2) pairs, ascending
  std::vector<int> labels;      // +1 edge / -1 non-edge, aligned with pairs

  // Labels are read from `g`. Throws std::invalid_argument on repeated or
  // invalid nodes.
  static TargetSet from_graph(const Graph& g, std::vector<NodeId> nodes);

  bool contains_node(NodeId u) const;
  bool contains_pair(const NodePair& p) const;
  // Fraction of pairs labeled +1; 0 for an empty set.
  double edge_fraction() const;
};

// A sample graph together with its labeled target set.
struct LabeledGraph {
  Graph graph;
  TargetSet targets;
};

}  // namespace rlp
