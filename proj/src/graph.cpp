#include "rlp/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlp {

NodePair::NodePair(NodeId x, NodeId y) : a_(std::min(x, y)), b_(std::max(x, y)) {
  if (x == y) {
    throw std::invalid_argument("NodePair: self pair (" + std::to_string(x) +
                                ")");
  }
}

std::string to_string(const NodePair& p) {
  return "(" + std::to_string(p.a()) + "," + std::to_string(p.b()) + ")";
}

void canonicalize(std::vector<NodePair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

Graph Graph::from_edges(std::size_t num_nodes,
                        std::span<const NodePair> edges) {
  Graph g(num_nodes);
  for (const NodePair& e : edges) {
    if (e.b() >= num_nodes) {
      throw std::invalid_argument("Graph: edge " + to_string(e) +
                                  " out of range for " +
                                  std::to_string(num_nodes) + " nodes");
    }
    g.adjacency_[e.a()].push_back(e.b());
    g.adjacency_[e.b()].push_back(e.a());
  }
  std::size_t endpoint_count = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    endpoint_count += nbrs.size();
  }
  g.num_edges_ = endpoint_count / 2;
  return g;
}

void Graph::check_node(NodeId u) const {
  if (u >= adjacency_.size()) {
    throw std::invalid_argument("invalid node id " + std::to_string(u) +
                                " (graph has " +
                                std::to_string(adjacency_.size()) + " nodes)");
  }
}

std::size_t Graph::degree(NodeId u) const {
  check_node(u);
  return adjacency_[u].size();
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check_node(u);
  return adjacency_[u];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& nu = adjacency_[u];
  const auto& nv = adjacency_[v];
  // Search the shorter list.
  return nu.size() <= nv.size() ? std::binary_search(nu.begin(), nu.end(), v)
                                : std::binary_search(nv.begin(), nv.end(), u);
}

std::vector<NodePair> Graph::edges() const {
  std::vector<NodePair> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

double Graph::mean_degree() const {
  if (adjacency_.empty()) return 0.0;
  return 2.0 * static_cast<double>(num_edges_) /
         static_cast<double>(adjacency_.size());
}

GraphView::GraphView(const Graph& graph, std::span<const NodePair> removed)
    : graph_(&graph) {
  for (const NodePair& e : removed) {
    if (graph.valid(e.b()) && graph.has_edge(e)) removed_.push_back(e);
  }
  canonicalize(removed_);
}

bool GraphView::is_removed(NodeId u, NodeId v) const {
  if (removed_.empty()) return false;
  return std::binary_search(removed_.begin(), removed_.end(), NodePair(u, v));
}

std::size_t GraphView::degree(NodeId u) const {
  std::size_t d = graph_->degree(u);
  for (const NodePair& e : removed_) {
    if (e.contains(u)) --d;
  }
  return d;
}

bool GraphView::has_edge(NodeId u, NodeId v) const {
  return graph_->has_edge(u, v) && !is_removed(u, v);
}

std::vector<NodeId> common_neighbors(const GraphView& g, NodeId u, NodeId v) {
  if (u == v) {
    throw std::invalid_argument("common_neighbors: u == v (" +
                                std::to_string(u) + ")");
  }
  const auto nu = g.base().neighbors(u);
  const auto nv = g.base().neighbors(v);
  std::vector<NodeId> out;
  auto i = nu.begin();
  auto j = nv.begin();
  while (i != nu.end() && j != nv.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      const NodeId w = *i;
      if (g.has_edge(u, w) && g.has_edge(v, w)) out.push_back(w);
      ++i;
      ++j;
    }
  }
  return out;
}

Graph delete_edges(const Graph& g, std::span<const NodePair> removals) {
  std::vector<NodePair> gone(removals.begin(), removals.end());
  canonicalize(gone);
  std::vector<NodePair> kept;
  kept.reserve(g.num_edges());
  for (const NodePair& e : g.edges()) {
    if (!std::binary_search(gone.begin(), gone.end(), e)) kept.push_back(e);
  }
  return Graph::from_edges(g.num_nodes(), kept);
}

std::vector<NodePair> two_hop_affected_pairs(
    const Graph& g, const NodePair& e, std::span<const NodePair> candidates) {
  std::vector<NodePair> out;
  const NodeId p = e.a();
  const NodeId q = e.b();
  for (const NodePair& c : candidates) {
    const NodeId x = c.a();
    const NodeId y = c.b();
    // Touches d(x), d(y) or, through them, N(x, y).
    bool affected = c.contains(p) || c.contains(q);
    // Touches the degree of a common neighbor.
    if (!affected) {
      affected = (g.has_edge(x, p) && g.has_edge(y, p)) ||
                 (g.has_edge(x, q) && g.has_edge(y, q));
    }
    if (affected) out.push_back(c);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> old_ids) {
  std::vector<NodeId> new_id(g.num_nodes(), static_cast<NodeId>(-1));
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    const NodeId u = old_ids[i];
    if (!g.valid(u) || new_id[u] != static_cast<NodeId>(-1)) {
      throw std::invalid_argument("induced_subgraph: invalid or repeated node " +
                                  std::to_string(u));
    }
    new_id[u] = static_cast<NodeId>(i);
  }
  std::vector<NodePair> edges;
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    for (NodeId v : g.neighbors(old_ids[i])) {
      const NodeId j = new_id[v];
      if (j != static_cast<NodeId>(-1) && i < j) {
        edges.emplace_back(static_cast<NodeId>(i), j);
      }
    }
  }
  return Graph::from_edges(old_ids.size(), edges);
}

std::vector<NodeId> largest_component(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> comp(n, n);
  std::vector<NodeId> best;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<NodeId> members;
    comp[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == n) {
          comp[v] = s;
          stack.push_back(v);
        }
      }
    }
    if (members.size() > best.size()) best = std::move(members);
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::size_t largest_component_size(const Graph& g) {
  return largest_component(g).size();
}

}  // namespace rlp
