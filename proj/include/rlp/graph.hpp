#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace rlp {

using NodeId = std::uint32_t;

// Unordered pair of distinct nodes, stored with a() < b().
class NodePair {
 public:
  NodePair(NodeId x, NodeId y);

  NodeId a() const { return a_; }
  NodeId b() const { return b_; }
  bool contains(NodeId u) const { return u == a_ || u == b_; }
  // The endpoint that is not `u`; `u` must be an endpoint.
  NodeId other(NodeId u) const { return u == a_ ? b_ : a_; }

  friend auto operator<=>(const NodePair&, const NodePair&) = default;

 private:
  NodeId a_;
  NodeId b_;
};

std::string to_string(const NodePair& p);

struct NodePairHash {
  std::size_t operator()(const NodePair& p) const {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(p.a()) << 32) | p.b());
  }
};

// Sorts and removes duplicates in place.
void canonicalize(std::vector<NodePair>& pairs);

// Immutable undirected simple graph on nodes [0, num_nodes()). Neighbor lists
// are sorted ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_nodes) : adjacency_(num_nodes) {}

  // Duplicate pairs are merged. Throws std::invalid_argument for endpoints out
  // of range.
  static Graph from_edges(std::size_t num_nodes,
                          std::span<const NodePair> edges);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool valid(NodeId u) const { return u < adjacency_.size(); }

  // Throws std::invalid_argument for an invalid node.
  std::size_t degree(NodeId u) const;
  std::span<const NodeId> neighbors(NodeId u) const;
  bool has_edge(NodeId u, NodeId v) const;
  bool has_edge(const NodePair& e) const { return has_edge(e.a(), e.b()); }

  // All edges in ascending canonical order.
  std::vector<NodePair> edges() const;
  double mean_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(NodeId u) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t num_edges_ = 0;
};

// Graph with a small set of edges hidden. Cheap to construct; used for every
// what-if deletion so that the underlying graph is never copied.
class GraphView {
 public:
  GraphView(const Graph& graph) : graph_(&graph) {}  // NOLINT: implicit
  // Pairs that are not edges of `graph` are ignored.
  GraphView(const Graph& graph, std::span<const NodePair> removed);

  const Graph& base() const { return *graph_; }
  std::size_t num_nodes() const { return graph_->num_nodes(); }
  std::size_t degree(NodeId u) const;
  bool has_edge(NodeId u, NodeId v) const;
  std::span<const NodePair> removed() const { return removed_; }

  template <typename Fn>
  void for_each_neighbor(NodeId u, Fn&& fn) const {
    for (NodeId v : graph_->neighbors(u)) {
      if (!is_removed(u, v)) fn(v);
    }
  }

 private:
  bool is_removed(NodeId u, NodeId v) const;

  const Graph* graph_;
  std::vector<NodePair> removed_;  // sorted, only actual edges
};

// adj(u) ∩ adj(v), ascending. Throws std::invalid_argument when u == v or
// either node is invalid.
std::vector<NodeId> common_neighbors(const GraphView& g, NodeId u, NodeId v);

// New graph without the given pairs. Non-edges are ignored.
Graph delete_edges(const Graph& g, std::span<const NodePair> removals);

// Subset of `candidates` whose local similarity can change when `e` is
// deleted from `g`: pairs sharing an endpoint with `e`, or having an endpoint
// of `e` as a common neighbor.
std::vector<NodePair> two_hop_affected_pairs(
    const Graph& g, const NodePair& e, std::span<const NodePair> candidates);

// Graph whose node i is `old_ids[i]` of `g`, keeping the edges among them.
// `old_ids` must be distinct valid nodes.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> old_ids);

// Nodes of the largest connected component, ascending. Ties go to the
// component containing the smallest node id.
std::vector<NodeId> largest_component(const Graph& g);
std::size_t largest_component_size(const Graph& g);

}  // namespace rlp
