#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rlp/damage.hpp"
#include "rlp/graph.hpp"

namespace rlp {

// minimize constant + sum_i linear[i] x_i + sum_{i<j} pairs[(i,j)] x_i x_j
// subject to sum_i x_i <= budget, x binary.
struct BinaryProgram {
  std::size_t num_vars = 0;
  std::map<std::size_t, double> linear;
  std::map<std::pair<std::size_t, std::size_t>, double> pairs;  // i < j
  std::size_t budget = 0;
  double constant = 0.0;

  void add_linear(std::size_t i, double coef);
  // Order of i and j does not matter; i != j.
  void add_pair(std::size_t i, std::size_t j, double coef);
  // Drops coefficients that are exactly zero.
  void prune_zeros();

  double evaluate(const std::vector<bool>& x) const;
  bool feasible(const std::vector<bool>& x) const;

  // {constant, linear:{"i":coef}, pairs:{"i,j":coef}, budget, num_vars}
  nlohmann::json to_json() const;
  static BinaryProgram from_json(const nlohmann::json& j);
};

enum class SolveStatus { kOptimal, kIncumbent };

struct Solution {
  std::vector<bool> assignment;
  double objective = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
  // Proven lower bound on the optimum; equals objective when optimal.
  double lower_bound = 0.0;
  double gap = 0.0;
  std::size_t nodes = 0;
};

struct SolverLimits {
  std::size_t max_nodes = 2'000'000;
  // Seconds; 0 disables the clock (keeps the search deterministic).
  double time_limit = 0.0;
};

// Depth-first branch and bound. Variables are branched in order of decreasing
// absolute coefficient mass. A node is pruned when the larger of two lower
// bounds reaches the incumbent: the per-term minimum over free variables
// (ignoring the budget) and a budget-aware bound that charges half of each
// negative pair coefficient to either endpoint and keeps the most negative
// remaining-budget many variables. `warm_starts` seed the incumbent together
// with a greedy assignment; infeasible ones are ignored. Deterministic.
Solution solve(const BinaryProgram& program, const SolverLimits& limits = {},
               std::span<const std::vector<bool>> warm_starts = {});

// Greedy descent adding the single variable or coupled pair with the most
// negative objective change until none improves or the budget is used.
std::vector<bool> greedy_assignment(const BinaryProgram& program);

// Expected-damage program over the tuples of every damage graph. Variable i
// protects `variables[i]`; an edge shared by several tuples or samples is one
// variable.
struct DamageProgram {
  BinaryProgram program;
  std::vector<NodePair> variables;  // ascending
};

// Tuple cost c2 x1 (1 - x2) + c1 (1 - x1) x2 + min(c1, c2)(1 - x1)(1 - x2)
// expanded into constant, linear and pair terms. Throws std::invalid_argument
// when any damage graph carries protection flags.
DamageProgram from_damage_graphs(std::span<const DamageGraph> graphs,
                                 std::size_t budget);

}  // namespace rlp
