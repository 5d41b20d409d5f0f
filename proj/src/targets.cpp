#include "rlp/targets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rlp {

TargetSet TargetSet::from_graph(const Graph& g, std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw std::invalid_argument("TargetSet: repeated node");
  }
  for (NodeId u : nodes) {
    if (!g.valid(u)) {
      throw std::invalid_argument("TargetSet: invalid node " +
                                  std::to_string(u));
    }
  }
  TargetSet t;
  t.nodes = std::move(nodes);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < t.nodes.size(); ++j) {
      const NodePair p(t.nodes[i], t.nodes[j]);
      t.pairs.push_back(p);
      t.labels.push_back(g.has_edge(p) ? +1 : -1);
    }
  }
  return t;
}

bool TargetSet::contains_node(NodeId u) const {
  return std::binary_search(nodes.begin(), nodes.end(), u);
}

bool TargetSet::contains_pair(const NodePair& p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

double TargetSet::edge_fraction() const {
  if (labels.empty()) return 0.0;
  const auto edges = std::count(labels.begin(), labels.end(), +1);
  return static_cast<double>(edges) / static_cast<double>(labels.size());
}

}  // namespace rlp
