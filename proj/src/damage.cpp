#include "rlp/damage.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rlp {

std::string_view damage_sign_name(DamageSign s) {
  return s == DamageSign::kAfterMinusBefore ? "after_minus_before"
                                            : "before_minus_after";
}

DamageSign parse_damage_sign(std::string_view name) {
  if (name == "after_minus_before") return DamageSign::kAfterMinusBefore;
  if (name == "before_minus_after") return DamageSign::kBeforeMinusAfter;
  throw std::invalid_argument("unknown damage sign '" + std::string(name) +
                              "' (expected after_minus_before or "
                              "before_minus_after)");
}

std::size_t DamageGraph::critical_count() const {
  return static_cast<std::size_t>(
      std::count_if(tuples.begin(), tuples.end(),
                    [](const DamageTuple& t) { return t.both_open(); }));
}

std::size_t DamageGraph::deletable_tuple_count() const {
  return static_cast<std::size_t>(
      std::count_if(tuples.begin(), tuples.end(),
                    [](const DamageTuple& t) { return !t.both_protected(); }));
}

std::size_t DamageGraph::both_protected_count() const {
  return tuples.size() - deletable_tuple_count();
}

nlohmann::json DamageGraph::to_json() const {
  nlohmann::json out;
  out["v1"] = v1;
  out["v2"] = v2;
  out["deg1"] = deg1;
  out["deg2"] = deg2;
  out["sample_index"] = sample_index;
  auto& arr = out["tuples"] = nlohmann::json::array();
  for (const DamageTuple& t : tuples) {
    arr.push_back({{"w", t.w},
                   {"c1", t.c1},
                   {"c2", t.c2},
                   {"prot1", t.prot1},
                   {"prot2", t.prot2}});
  }
  return out;
}

namespace {

// Loss change from hiding `e`, restricted to the target pairs it can affect.
double single_deletion_delta(const Graph& g, const NodePair& e,
                             const TargetSet& targets,
                             const std::vector<double>& base_losses,
                             MetricKind m, const LossParams& params) {
  const std::vector<NodePair> affected =
      two_hop_affected_pairs(g, e, targets.pairs);
  const NodePair removed[] = {e};
  const GraphView after(g, removed);
  double delta = 0.0;
  for (const NodePair& p : affected) {
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(targets.pairs.begin(), targets.pairs.end(), p) -
        targets.pairs.begin());
    const double sim = similarity(m, after, p.a(), p.b());
    delta += pair_loss(sim, targets.labels[idx], params) - base_losses[idx];
  }
  return delta;
}

}  // namespace

DamageGraph build_damage_graph(const Graph& g, const NodePair& h_a,
                               const TargetSet& targets, MetricKind m,
                               const LossParams& params,
                               const DefensePlan& plan, DamageSign sign) {
  if (!g.has_edge(h_a)) {
    throw std::invalid_argument("build_damage_graph: attack target " +
                                to_string(h_a) + " is not an edge");
  }
  const GraphView base(g);
  std::vector<double> base_losses(targets.pairs.size());
  for (std::size_t i = 0; i < targets.pairs.size(); ++i) {
    const NodePair& p = targets.pairs[i];
    base_losses[i] =
        pair_loss(similarity(m, base, p.a(), p.b()), targets.labels[i], params);
  }
  const double orient = sign == DamageSign::kAfterMinusBefore ? 1.0 : -1.0;

  DamageGraph dg;
  dg.v1 = h_a.a();
  dg.v2 = h_a.b();
  dg.deg1 = g.degree(dg.v1);
  dg.deg2 = g.degree(dg.v2);
  for (NodeId w : common_neighbors(base, dg.v1, dg.v2)) {
    DamageTuple t;
    t.w = w;
    t.c1 = orient * single_deletion_delta(g, dg.edge1(t), targets, base_losses,
                                          m, params);
    t.c2 = orient * single_deletion_delta(g, dg.edge2(t), targets, base_losses,
                                          m, params);
    dg.tuples.push_back(t);
  }
  return with_protection(std::move(dg), plan);
}

DamageGraph with_protection(DamageGraph dg, const DefensePlan& plan) {
  for (DamageTuple& t : dg.tuples) {
    t.prot1 = plan.protects(dg.edge1(t));
    t.prot2 = plan.protects(dg.edge2(t));
  }
  return dg;
}

double plan_damage(const DamageGraph& dg, const AttackPlan& attack) {
  auto find_tuple = [&](NodeId w) -> const DamageTuple* {
    const auto it = std::lower_bound(
        dg.tuples.begin(), dg.tuples.end(), w,
        [](const DamageTuple& t, NodeId x) { return t.w < x; });
    return it != dg.tuples.end() && it->w == w ? &*it : nullptr;
  };
  double total = 0.0;
  for (const NodePair& e : attack.deletions) {
    const DamageTuple* t = nullptr;
    if (e.contains(dg.v1) && !e.contains(dg.v2)) {
      if ((t = find_tuple(e.other(dg.v1)))) {
        total += t->c1;
        continue;
      }
    } else if (e.contains(dg.v2) && !e.contains(dg.v1)) {
      if ((t = find_tuple(e.other(dg.v2)))) {
        total += t->c2;
        continue;
      }
    }
    throw std::invalid_argument("plan_damage: deletion " + to_string(e) +
                                " is not an edge of the damage graph");
  }
  return total;
}

}  // namespace rlp
