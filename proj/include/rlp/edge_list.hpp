#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "rlp/graph.hpp"

namespace rlp {

// Graph read from a text edge list. Node ids in the file may be sparse; they
// are compacted to [0, n) in ascending order and `original_ids[i]` is the file
// id of node i.
struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> original_ids;
};

// One edge per line, two whitespace-separated non-negative integers. Blank
// lines and lines starting with '#' are skipped. Self-loops and repeated edges
// are dropped. Throws std::runtime_error with the line number on bad input.
LoadedGraph read_edge_list(std::istream& in);
LoadedGraph read_edge_list(const std::filesystem::path& path);

// Sorted, deduplicated "a b" lines. A nonzero `num_nodes` adds a
// "# nodes N" comment that read_dense_graph() uses to keep isolated nodes.
void write_edge_list(std::ostream& out, std::span<const NodePair> edges,
                     std::size_t num_nodes = 0);
void write_edge_list(const std::filesystem::path& path,
                     std::span<const NodePair> edges,
                     std::size_t num_nodes = 0);

// Reads a graph whose file ids are already compact (as written by this
// library). Node count comes from the "# nodes N" comment when present, else
// max id + 1.
Graph read_dense_graph(const std::filesystem::path& path);

// "compact original" per line.
void write_id_map(const std::filesystem::path& path,
                  std::span<const std::uint64_t> original_ids);

// Plain list of pairs (defense plans, deletion sets) in edge-list format.
std::vector<NodePair> read_pair_list(const std::filesystem::path& path);

}  // namespace rlp
