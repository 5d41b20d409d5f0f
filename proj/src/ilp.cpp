#include "rlp/ilp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rlp {

void BinaryProgram::add_linear(std::size_t i, double coef) {
  if (i >= num_vars) throw std::invalid_argument("add_linear: bad variable");
  linear[i] += coef;
}

void BinaryProgram::add_pair(std::size_t i, std::size_t j, double coef) {
  if (i == j || i >= num_vars || j >= num_vars) {
    throw std::invalid_argument("add_pair: bad variable pair");
  }
  pairs[{std::min(i, j), std::max(i, j)}] += coef;
}

void BinaryProgram::prune_zeros() {
  std::erase_if(linear, [](const auto& kv) { return kv.second == 0.0; });
  std::erase_if(pairs, [](const auto& kv) { return kv.second == 0.0; });
}

double BinaryProgram::evaluate(const std::vector<bool>& x) const {
  double value = constant;
  for (const auto& [i, c] : linear) {
    if (x[i]) value += c;
  }
  for (const auto& [ij, c] : pairs) {
    if (x[ij.first] && x[ij.second]) value += c;
  }
  return value;
}

bool BinaryProgram::feasible(const std::vector<bool>& x) const {
  return x.size() == num_vars &&
         static_cast<std::size_t>(std::count(x.begin(), x.end(), true)) <=
             budget;
}

nlohmann::json BinaryProgram::to_json() const {
  nlohmann::json out;
  out["num_vars"] = num_vars;
  out["budget"] = budget;
  out["constant"] = constant;
  out["linear"] = nlohmann::json::object();
  for (const auto& [i, c] : linear) out["linear"][std::to_string(i)] = c;
  out["pairs"] = nlohmann::json::object();
  for (const auto& [ij, c] : pairs) {
    out["pairs"][std::to_string(ij.first) + "," + std::to_string(ij.second)] =
        c;
  }
  return out;
}

BinaryProgram BinaryProgram::from_json(const nlohmann::json& j) {
  BinaryProgram p;
  p.num_vars = j.at("num_vars").get<std::size_t>();
  p.budget = j.at("budget").get<std::size_t>();
  p.constant = j.at("constant").get<double>();
  for (const auto& [key, c] : j.at("linear").items()) {
    p.add_linear(std::stoul(key), c.get<double>());
  }
  for (const auto& [key, c] : j.at("pairs").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("BinaryProgram: bad pair key '" + key + "'");
    }
    p.add_pair(std::stoul(key.substr(0, comma)),
               std::stoul(key.substr(comma + 1)), c.get<double>());
  }
  return p;
}

namespace {

struct Coupling {
  std::size_t var;
  double coef;
};

struct Structure {
  std::vector<double> lin;
  std::vector<std::vector<Coupling>> adj;

  explicit Structure(const BinaryProgram& p)
      : lin(p.num_vars, 0.0), adj(p.num_vars) {
    for (const auto& [i, c] : p.linear) lin[i] += c;
    for (const auto& [ij, c] : p.pairs) {
      adj[ij.first].push_back({ij.second, c});
      adj[ij.second].push_back({ij.first, c});
    }
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const BinaryProgram& program, const SolverLimits& limits)
      : program_(program),
        s_(program),
        limits_(limits),
        value_(program.num_vars, kFree),
        gain_(program.num_vars, 0.0),
        best_value_(std::numeric_limits<double>::infinity()),
        start_(std::chrono::steady_clock::now()) {
    std::vector<double> mass(program.num_vars, 0.0);
    for (std::size_t v = 0; v < program.num_vars; ++v) {
      mass[v] = std::abs(s_.lin[v]);
      for (const Coupling& c : s_.adj[v]) mass[v] += std::abs(c.coef);
    }
    order_.resize(program.num_vars);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return mass[a] > mass[b];
                     });
  }

  void offer(const std::vector<bool>& x) {
    if (!program_.feasible(x)) return;
    const double v = program_.evaluate(x);
    if (v < best_value_) {
      best_value_ = v;
      best_ = x;
    }
  }

  Solution run() {
    root_bound_ = node_bound();
    dfs(0);
    Solution sol;
    sol.assignment = best_;
    sol.objective = program_.evaluate(best_);
    sol.nodes = nodes_;
    if (stopped_) {
      sol.status = SolveStatus::kIncumbent;
      sol.lower_bound = std::min(root_bound_, sol.objective);
      sol.gap = sol.objective - sol.lower_bound;
    } else {
      sol.status = SolveStatus::kOptimal;
      sol.lower_bound = sol.objective;
      sol.gap = 0.0;
    }
    return sol;
  }

 private:
  static constexpr signed char kFree = -1;

  // Objective with every free variable at zero.
  double fixed_value() const {
    double v = program_.constant;
    for (std::size_t i = 0; i < value_.size(); ++i) {
      if (value_[i] != 1) continue;
      v += s_.lin[i];
      for (const Coupling& c : s_.adj[i]) {
        if (c.var > i && value_[c.var] == 1) v += c.coef;
      }
    }
    return v;
  }

  // Lower bound for the current node; also refreshes gain_ for free
  // variables.
  double node_bound() {
    const double base = fixed_value();
    double relaxed = 0.0;
    negatives_.clear();
    for (std::size_t i = 0; i < value_.size(); ++i) {
      if (value_[i] != kFree) continue;
      relaxed += std::min(0.0, s_.lin[i]);
      double g = s_.lin[i];
      for (const Coupling& c : s_.adj[i]) {
        const signed char other = value_[c.var];
        if (other == 1) {
          relaxed += std::min(0.0, c.coef);
          g += c.coef;
        } else if (other == kFree) {
          if (c.var > i) relaxed += std::min(0.0, c.coef);
          g += 0.5 * std::min(0.0, c.coef);
        }
      }
      gain_[i] = g;
      if (g < 0.0) negatives_.push_back(g);
    }
    const std::size_t room = program_.budget - ones_;
    double budgeted = 0.0;
    if (negatives_.size() > room) {
      std::nth_element(negatives_.begin(),
                       negatives_.begin() + static_cast<std::ptrdiff_t>(room),
                       negatives_.end());
      negatives_.resize(room);
    }
    for (double g : negatives_) budgeted += g;
    return base + std::max(relaxed, budgeted);
  }

  bool out_of_limits() {
    if (nodes_ >= limits_.max_nodes) return true;
    if (limits_.time_limit > 0.0 && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > limits_.time_limit) return true;
    }
    return false;
  }

  void dfs(std::size_t depth) {
    if (stopped_) return;
    if (out_of_limits()) {
      stopped_ = true;
      return;
    }
    ++nodes_;
    if (depth == order_.size() || ones_ == program_.budget) {
      const double v = fixed_value();
      if (v < best_value_) {
        best_value_ = v;
        best_.assign(value_.size(), false);
        for (std::size_t i = 0; i < value_.size(); ++i) best_[i] = value_[i] == 1;
      }
      return;
    }
    const double bound = node_bound();
    const double slack = 1e-12 * std::max(1.0, std::abs(best_value_));
    if (bound >= best_value_ - slack) return;

    const std::size_t var = order_[depth];
    const int first = gain_[var] < 0.0 ? 1 : 0;
    for (int branch = 0; branch < 2; ++branch) {
      const int val = branch == 0 ? first : 1 - first;
      if (val == 1 && ones_ == program_.budget) continue;
      value_[var] = static_cast<signed char>(val);
      ones_ += static_cast<std::size_t>(val);
      dfs(depth + 1);
      ones_ -= static_cast<std::size_t>(val);
      value_[var] = kFree;
      if (stopped_) return;
    }
  }

  const BinaryProgram& program_;
  Structure s_;
  SolverLimits limits_;
  std::vector<std::size_t> order_;
  std::vector<signed char> value_;
  std::vector<double> gain_;
  std::vector<double> negatives_;
  std::size_t ones_ = 0;
  std::vector<bool> best_;
  double best_value_;
  double root_bound_ = 0.0;
  std::size_t nodes_ = 0;
  bool stopped_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<bool> greedy_assignment(const BinaryProgram& program) {
  const Structure s(program);
  std::vector<bool> x(program.num_vars, false);
  // gain[v]: objective change from setting v given the current selection.
  std::vector<double> gain = s.lin;
  std::size_t ones = 0;
  auto select = [&](std::size_t v) {
    x[v] = true;
    ++ones;
    for (const Coupling& c : s.adj[v]) gain[c.var] += c.coef;
  };
  while (ones < program.budget) {
    double best = -1e-15;
    std::size_t a = program.num_vars;
    std::size_t b = program.num_vars;
    for (std::size_t v = 0; v < program.num_vars; ++v) {
      if (!x[v] && gain[v] < best) {
        best = gain[v];
        a = v;
        b = program.num_vars;
      }
    }
    if (ones + 2 <= program.budget) {
      for (const auto& [ij, c] : program.pairs) {
        if (x[ij.first] || x[ij.second]) continue;
        const double d = gain[ij.first] + gain[ij.second] + c;
        if (d < best) {
          best = d;
          a = ij.first;
          b = ij.second;
        }
      }
    }
    if (a == program.num_vars) break;
    select(a);
    if (b != program.num_vars) select(b);
  }
  return x;
}

Solution solve(const BinaryProgram& program, const SolverLimits& limits,
               std::span<const std::vector<bool>> warm_starts) {
  BranchAndBound bb(program, limits);
  bb.offer(std::vector<bool>(program.num_vars, false));
  bb.offer(greedy_assignment(program));
  for (const auto& x : warm_starts) bb.offer(x);
  return bb.run();
}

DamageProgram from_damage_graphs(std::span<const DamageGraph> graphs,
                                 std::size_t budget) {
  DamageProgram out;
  for (const DamageGraph& dg : graphs) {
    for (const DamageTuple& t : dg.tuples) {
      if (t.prot1 || t.prot2) {
        throw std::invalid_argument(
            "from_damage_graphs: damage graphs must not carry protection");
      }
      out.variables.push_back(dg.edge1(t));
      out.variables.push_back(dg.edge2(t));
    }
  }
  canonicalize(out.variables);
  auto var_of = [&](const NodePair& e) {
    return static_cast<std::size_t>(
        std::lower_bound(out.variables.begin(), out.variables.end(), e) -
        out.variables.begin());
  };
  BinaryProgram& p = out.program;
  p.num_vars = out.variables.size();
  p.budget = budget;
  for (const DamageGraph& dg : graphs) {
    for (const DamageTuple& t : dg.tuples) {
      const std::size_t x1 = var_of(dg.edge1(t));
      const std::size_t x2 = var_of(dg.edge2(t));
      const double m = std::min(t.c1, t.c2);
      p.constant += m;
      p.add_linear(x1, t.c2 - m);
      p.add_linear(x2, t.c1 - m);
      p.add_pair(x1, x2, m - t.c1 - t.c2);
    }
  }
  p.prune_zeros();
  return out;
}

}  // namespace rlp
