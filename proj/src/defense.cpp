#include "rlp/defense.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace rlp {

std::string_view defense_name(DefenseKind k) {
  switch (k) {
    case DefenseKind::kNone: return "none";
    case DefenseKind::kIdOpt: return "idopt";
    case DefenseKind::kIdRank: return "idrank";
    case DefenseKind::kPpn: return "ppn";
  }
  return "?";
}

DefenseKind parse_defense(std::string_view name) {
  if (name == "none") return DefenseKind::kNone;
  if (name == "idopt") return DefenseKind::kIdOpt;
  if (name == "idrank") return DefenseKind::kIdRank;
  if (name == "ppn") return DefenseKind::kPpn;
  throw std::invalid_argument("unknown defense '" + std::string(name) +
                              "' (expected none, idopt, idrank or ppn)");
}

CriticalEdgeSet critical_edges(const Graph& g, const TargetSet& targets) {
  CriticalEdgeSet out;
  for (const NodePair& e : g.edges()) {
    if (targets.contains_node(e.a()) != targets.contains_node(e.b())) {
      out.edges.push_back(e);
    }
  }
  return out;
}

double expected_damage(std::span<const DamageGraph> graphs,
                       const DefensePlan& plan) {
  double total = 0.0;
  for (const DamageGraph& dg : graphs) {
    for (const DamageTuple& t : dg.tuples) {
      const bool p1 = plan.protects(dg.edge1(t));
      const bool p2 = plan.protects(dg.edge2(t));
      if (p1 && p2) continue;
      if (p1) {
        total += t.c2;
      } else if (p2) {
        total += t.c1;
      } else {
        total += std::min(t.c1, t.c2);
      }
    }
  }
  return total;
}

std::size_t covered_occurrences(std::span<const DamageGraph> graphs,
                                const DefensePlan& plan) {
  std::size_t n = 0;
  for (const DamageGraph& dg : graphs) {
    for (const DamageTuple& t : dg.tuples) {
      n += plan.protects(dg.edge1(t)) ? 1 : 0;
      n += plan.protects(dg.edge2(t)) ? 1 : 0;
    }
  }
  return n;
}

namespace {

void annotate(DefensePlan& plan, std::span<const DamageGraph> graphs) {
  plan.covered_occurrences = covered_occurrences(graphs, plan);
  for (const DamageGraph& dg : graphs) {
    for (const DamageTuple& t : dg.tuples) {
      if (std::min(t.c1, t.c2) <= 0.0) continue;
      if (plan.protects(dg.edge1(t)) != plan.protects(dg.edge2(t))) {
        plan.single_slot_spent = true;
        return;
      }
    }
  }
}

void require_unflagged(std::span<const DamageGraph> graphs,
                       const char* who) {
  for (const DamageGraph& dg : graphs) {
    for (const DamageTuple& t : dg.tuples) {
      if (t.prot1 || t.prot2) {
        throw std::invalid_argument(std::string(who) +
                                    ": damage graphs must not carry "
                                    "protection");
      }
    }
  }
}

}  // namespace

DefensePlan idrank(std::span<const DamageGraph> graphs, std::size_t k_d) {
  require_unflagged(graphs, "idrank");
  std::map<NodePair, double> importance;
  for (const DamageGraph& dg : graphs) {
    for (const DamageTuple& t : dg.tuples) {
      const double w = std::min(t.c1, t.c2);
      if (w <= 0.0) continue;
      importance[dg.edge1(t)] += w;
      importance[dg.edge2(t)] += w;
    }
  }
  std::vector<std::pair<NodePair, double>> ranked(importance.begin(),
                                                  importance.end());
  // Map order is ascending pair, so a stable sort keeps that order on ties.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) {
                     return x.second > y.second;
                   });
  std::vector<NodePair> chosen;
  for (std::size_t i = 0; i < std::min(k_d, ranked.size()); ++i) {
    chosen.push_back(ranked[i].first);
  }
  DefensePlan plan = DefensePlan::make(std::move(chosen), k_d);
  annotate(plan, graphs);
  return plan;
}

DefensePlan idopt(std::span<const DamageGraph> graphs, std::size_t k_d,
                  const SolverLimits& limits) {
  const DamageProgram dp = from_damage_graphs(graphs, k_d);
  const DefensePlan ranked = idrank(graphs, k_d);
  std::vector<bool> warm(dp.variables.size(), false);
  for (std::size_t i = 0; i < dp.variables.size(); ++i) {
    warm[i] = ranked.protects(dp.variables[i]);
  }
  const std::vector<bool> starts[] = {warm};
  const Solution sol = solve(dp.program, limits, starts);

  std::vector<NodePair> chosen;
  for (std::size_t i = 0; i < dp.variables.size(); ++i) {
    if (sol.assignment[i]) chosen.push_back(dp.variables[i]);
  }
  DefensePlan plan = DefensePlan::make(std::move(chosen), k_d);
  if (sol.status != SolveStatus::kOptimal) plan.optimality_gap = sol.gap;
  annotate(plan, graphs);
  return plan;
}

DefensePlan ppn(const CriticalEdgeSet& critical, std::size_t k_d, Rng& rng) {
  const std::size_t count = std::min(k_d, critical.edges.size());
  std::vector<NodePair> chosen;
  chosen.reserve(count);
  for (std::size_t i : rng.sample_indices(critical.edges.size(), count)) {
    chosen.push_back(critical.edges[i]);
  }
  return DefensePlan::make(std::move(chosen), k_d);
}

}  // namespace rlp
