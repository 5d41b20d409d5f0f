#include "rlp/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rlp {

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_lines(
    std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long x = -1;
    long long y = -1;
    if (!(fields >> x >> y) || x < 0 || y < 0) {
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected two non-negative integers, got '" +
                               line + "'");
    }
    raw.emplace_back(static_cast<std::uint64_t>(x),
                     static_cast<std::uint64_t>(y));
  }
  return raw;
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in) {
  const auto raw = parse_lines(in);
  LoadedGraph out;
  for (const auto& [x, y] : raw) {
    out.original_ids.push_back(x);
    out.original_ids.push_back(y);
  }
  std::sort(out.original_ids.begin(), out.original_ids.end());
  out.original_ids.erase(
      std::unique(out.original_ids.begin(), out.original_ids.end()),
      out.original_ids.end());
  auto compact = [&](std::uint64_t id) {
    return static_cast<NodeId>(
        std::lower_bound(out.original_ids.begin(), out.original_ids.end(), id) -
        out.original_ids.begin());
  };
  std::vector<NodePair> edges;
  edges.reserve(raw.size());
  for (const auto& [x, y] : raw) {
    if (x == y) continue;
    edges.emplace_back(compact(x), compact(y));
  }
  out.graph = Graph::from_edges(out.original_ids.size(), edges);
  return out;
}

LoadedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, std::span<const NodePair> edges,
                     std::size_t num_nodes) {
  if (num_nodes > 0) out << "# nodes " << num_nodes << '\n';
  std::vector<NodePair> sorted(edges.begin(), edges.end());
  canonicalize(sorted);
  for (const NodePair& e : sorted) out << e.a() << ' ' << e.b() << '\n';
}

void write_edge_list(const std::filesystem::path& path,
                     std::span<const NodePair> edges, std::size_t num_nodes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, edges, num_nodes);
}

Graph read_dense_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::size_t declared = 0;
  {
    std::istringstream lines(buffer.str());
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream fields(line);
      std::string hash;
      std::string key;
      std::size_t value = 0;
      if (fields >> hash >> key >> value && hash == "#" && key == "nodes") {
        declared = value;
        break;
      }
    }
  }
  std::istringstream body(buffer.str());
  std::size_t n = declared;
  std::vector<NodePair> edges;
  for (const auto& [x, y] : parse_lines(body)) {
    if (x == y) continue;
    edges.emplace_back(static_cast<NodeId>(x), static_cast<NodeId>(y));
    n = std::max<std::size_t>(n, std::max(x, y) + 1);
  }
  return Graph::from_edges(n, edges);
}

void write_id_map(const std::filesystem::path& path,
                  std::span<const std::uint64_t> original_ids) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# compact original\n";
  for (std::size_t i = 0; i < original_ids.size(); ++i) {
    out << i << ' ' << original_ids[i] << '\n';
  }
}

std::vector<NodePair> read_pair_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<NodePair> pairs;
  for (const auto& [x, y] : parse_lines(in)) {
    if (x == y) {
      throw std::runtime_error(path.string() + ": self pair " +
                               std::to_string(x));
    }
    pairs.emplace_back(static_cast<NodeId>(x), static_cast<NodeId>(y));
  }
  canonicalize(pairs);
  return pairs;
}

}  // namespace rlp
