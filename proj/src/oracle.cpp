#include "rlp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

namespace rlp {

double ExactAttackResult::min_independent_damage() const {
  return independent_damage.empty()
             ? 0.0
             : *std::min_element(independent_damage.begin(),
                                 independent_damage.end());
}

namespace {

bool ties(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

ExactAttackResult brute_attack(const Graph& g, const NodePair& h_a,
                               const DefensePlan& plan, MetricKind m,
                               std::size_t k_attack, const TargetSet& targets,
                               const LossParams& params, TupleRule rule) {
  if (!g.has_edge(h_a)) {
    throw std::invalid_argument("brute_attack: " + to_string(h_a) +
                                " is not an edge");
  }
  const NodeId v1 = h_a.a();
  const NodeId v2 = h_a.b();
  std::vector<NodePair> cand;
  std::vector<NodeId> owner;  // common neighbor behind each candidate
  for (NodeId w : common_neighbors(g, v1, v2)) {
    for (NodeId v : {v1, v2}) {
      const NodePair e(v, w);
      if (!plan.protects(e)) {
        cand.push_back(e);
        owner.push_back(w);
      }
    }
  }
  if (cand.size() > 20) {
    throw OracleSizeError("brute_attack: " + std::to_string(cand.size()) +
                          " candidate edges (limit 20)");
  }

  const double base_loss = total_loss(g, targets, m, params);
  std::vector<double> single(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const Graph after = delete_edges(g, std::span(&cand[i], 1));
    single[i] = total_loss(after, targets, m, params) - base_loss;
  }

  ExactAttackResult res;
  res.min_similarity = std::numeric_limits<double>::infinity();
  const std::uint32_t total = std::uint32_t{1} << cand.size();
  std::vector<NodePair> chosen;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > k_attack) continue;
    if (rule == TupleRule::kOnePerTuple) {
      bool doubled = false;
      for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
        if ((mask >> i & 1U) && (mask >> (i + 1) & 1U) &&
            owner[i] == owner[i + 1]) {
          doubled = true;
        }
      }
      if (doubled) continue;
    }
    chosen.clear();
    double independent = 0.0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (mask >> i & 1U) {
        chosen.push_back(cand[i]);
        independent += single[i];
      }
    }
    const Graph after = delete_edges(g, chosen);
    const double sim = similarity(m, after, v1, v2);
    if (res.optimal_plans.empty() ||
        (sim < res.min_similarity && !ties(sim, res.min_similarity))) {
      res.min_similarity = sim;
      res.optimal_plans.clear();
      res.independent_damage.clear();
      res.exact_loss.clear();
    } else if (!ties(sim, res.min_similarity)) {
      continue;
    }
    AttackPlan p;
    p.deletions = chosen;
    canonicalize(p.deletions);
    res.optimal_plans.push_back(std::move(p));
    res.independent_damage.push_back(independent);
    res.exact_loss.push_back(total_loss(after, targets, m, params));
  }
  for (std::size_t i = 1; i < res.exact_loss.size(); ++i) {
    if (res.exact_loss[i] < res.exact_loss[res.defender_favorite]) {
      res.defender_favorite = i;
    }
  }
  return res;
}

namespace {

// Calls fn(subset) for every subset of at most k elements of `cand`, in
// increasing mask order.
template <typename Fn>
void for_each_subset(const std::vector<NodePair>& cand, std::size_t k,
                     Fn&& fn) {
  const std::uint32_t total = std::uint32_t{1} << cand.size();
  std::vector<NodePair> subset;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > k) continue;
    subset.clear();
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (mask >> i & 1U) subset.push_back(cand[i]);
    }
    fn(subset);
  }
}

void keep_best(BruteDefenseResult& best, bool& have,
               const std::vector<NodePair>& subset, double objective,
               std::size_t k_d) {
  const bool better = !have || (objective < best.objective &&
                                !ties(objective, best.objective));
  const bool tied_smaller = have && ties(objective, best.objective) &&
                            subset < best.plan.protected_pairs;
  if (better || tied_smaller) {
    best.plan = DefensePlan::make(subset, k_d);
    best.objective = objective;
    have = true;
  }
}

}  // namespace

BruteDefenseResult brute_defense_cheaper_side(std::span<const DamageGraph> graphs,
                                       std::size_t k_d) {
  std::vector<NodePair> cand;
  for (const DamageGraph& dg : graphs) {
    for (const DamageTuple& t : dg.tuples) {
      cand.push_back(dg.edge1(t));
      cand.push_back(dg.edge2(t));
    }
  }
  canonicalize(cand);
  if (cand.size() > 16) {
    throw OracleSizeError("brute_defense: " + std::to_string(cand.size()) +
                          " candidate edges (limit 16)");
  }
  BruteDefenseResult best;
  bool have = false;
  for_each_subset(cand, k_d, [&](const std::vector<NodePair>& subset) {
    auto guarded = [&](const NodePair& e) {
      return std::binary_search(subset.begin(), subset.end(), e);
    };
    double objective = 0.0;
    for (const DamageGraph& dg : graphs) {
      for (const DamageTuple& t : dg.tuples) {
        const bool p1 = guarded(dg.edge1(t));
        const bool p2 = guarded(dg.edge2(t));
        // The attacker's move on this tuple, then its cost.
        if (!p1 && !p2) {
          objective += t.c1 <= t.c2 ? t.c1 : t.c2;
        } else if (!p1) {
          objective += t.c1;
        } else if (!p2) {
          objective += t.c2;
        }
      }
    }
    keep_best(best, have, subset, objective, k_d);
  });
  return best;
}

BruteDefenseResult brute_defense_exact(std::span<const OracleSample> samples,
                                       std::size_t k_d, MetricKind m,
                                       const LossParams& params) {
  std::vector<NodePair> cand;
  for (const OracleSample& s : samples) {
    for (NodeId w : common_neighbors(s.graph, s.h_a.a(), s.h_a.b())) {
      cand.emplace_back(s.h_a.a(), w);
      cand.emplace_back(s.h_a.b(), w);
    }
  }
  canonicalize(cand);
  if (cand.size() > 16) {
    throw OracleSizeError("brute_defense: " + std::to_string(cand.size()) +
                          " candidate edges (limit 16)");
  }
  BruteDefenseResult best;
  bool have = false;
  for_each_subset(cand, k_d, [&](const std::vector<NodePair>& subset) {
    const DefensePlan plan = DefensePlan::make(subset, k_d);
    double objective = 0.0;
    for (const OracleSample& s : samples) {
      const std::size_t k_attack =
          common_neighbors(s.graph, s.h_a.a(), s.h_a.b()).size();
      const ExactAttackResult r =
          brute_attack(s.graph, s.h_a, plan, m, k_attack, s.targets, params,
                       TupleRule::kOnePerTuple);
      objective += r.exact_loss[r.defender_favorite];
    }
    keep_best(best, have, subset, objective, k_d);
  });
  return best;
}

Solution brute_solve(const BinaryProgram& program) {
  const std::size_t n = program.num_vars;
  if (n > 22) {
    throw OracleSizeError("brute_solve: " + std::to_string(n) +
                          " variables (limit 22)");
  }
  std::vector<double> lin(n, 0.0);
  for (const auto& [i, c] : program.linear) lin[i] += c;
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const auto& [ij, c] : program.pairs) {
    adj[ij.first].emplace_back(ij.second, c);
    adj[ij.second].emplace_back(ij.first, c);
  }
  std::vector<bool> x(n, false);
  std::size_t ones = 0;
  double value = program.constant;
  Solution best;
  best.assignment = x;
  best.objective = value;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    // Flip the lowest set bit of the step counter.
    const auto v = static_cast<std::size_t>(std::countr_zero(step));
    const double sign = x[v] ? -1.0 : 1.0;
    double delta = lin[v];
    for (const auto& [u, c] : adj[v]) {
      if (x[u]) delta += c;
    }
    value += sign * delta;
    x[v] = !x[v];
    ones = x[v] ? ones + 1 : ones - 1;
    if (ones <= program.budget && value < best.objective) {
      best.objective = value;
      best.assignment = x;
    }
  }
  // Re-evaluate to shed the drift of the running sum.
  best.objective = program.evaluate(best.assignment);
  best.lower_bound = best.objective;
  best.nodes = static_cast<std::size_t>(total);
  return best;
}

GadgetInstance gadget_from_graph(const Graph& base) {
  const std::size_t k = base.num_nodes();
  if (k > 8) {
    throw std::invalid_argument("gadget_from_graph: more than 8 base nodes");
  }
  GadgetInstance inst;
  inst.base_graph = base;
  inst.v1 = static_cast<NodeId>(k);
  inst.v2 = static_cast<NodeId>(k + 1);
  std::vector<NodePair> edges;
  for (NodeId u = 0; u < k; ++u) {
    edges.emplace_back(u, inst.v1);
    edges.emplace_back(u, inst.v2);
  }
  inst.lifted = Graph::from_edges(k + 2, edges);
  inst.h_d = base.edges();
  return inst;
}

GadgetVerdict verify_gadget(const GadgetInstance& inst) {
  const std::size_t k = inst.base_graph.num_nodes();
  if (k > 8) throw std::invalid_argument("verify_gadget: more than 8 nodes");
  GadgetVerdict v;
  v.min_sh = std::numeric_limits<double>::infinity();
  const std::uint32_t total = std::uint32_t{1} << k;
  std::vector<NodePair> removed;
  for (std::uint32_t side = 0; side < total; ++side) {
    // Node u keeps its link to V1 when its bit is set, else to V2.
    removed.clear();
    for (NodeId u = 0; u < k; ++u) {
      removed.emplace_back(u, (side >> u & 1U) ? inst.v2 : inst.v1);
    }
    const GraphView after(inst.lifted, removed);
    double sh = 0.0;
    for (const NodePair& p : inst.h_d) {
      sh += similarity(MetricKind::kCommonNeighbors, after, p.a(), p.b());
    }
    v.min_sh = std::min(v.min_sh, sh);

    std::size_t cut = 0;
    for (const NodePair& e : inst.base_graph.edges()) {
      if ((side >> e.a() & 1U) != (side >> e.b() & 1U)) ++cut;
    }
    v.maxcut = std::max(v.maxcut, cut);
  }
  if (k == 0) v.min_sh = 0.0;
  v.consistent = v.min_sh == static_cast<double>(inst.h_d.size() - v.maxcut);
  return v;
}

DiagnosticRow attack_diagnostic(std::size_t instance, const Graph& g,
                                const DamageGraph& dg,
                                const AttackPlan& attack, MetricKind m,
                                const TargetSet& targets,
                                const LossParams& params) {
  DiagnosticRow row;
  row.instance = instance;
  const GraphView after(g, attack.deletions);
  row.min_similarity = similarity(m, after, dg.v1, dg.v2);
  row.independent_damage = plan_damage(dg, attack);
  row.exact_damage = total_loss(after, targets, m, params) -
                     total_loss(g, targets, m, params);
  return row;
}

void write_diagnostics_csv(std::ostream& out,
                           std::span<const DiagnosticRow> rows) {
  out << "instance,min_similarity,independent_damage,exact_damage,gap\n";
  char buf[160];
  for (const DiagnosticRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g,%.12g\n", r.instance,
                  r.min_similarity, r.independent_damage, r.exact_damage,
                  r.gap());
    out << buf;
  }
}

}  // namespace rlp
