#include "rlp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "rlp/attack.hpp"
#include "rlp/defense.hpp"
#include "rlp/metrics.hpp"

namespace rlp {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform01();
}

// Coefficients on a coarse grid now and then, so that exact ties show up.
double coefficient(Rng& rng, double lo, double hi) {
  if (rng.bernoulli(0.3)) {
    return std::round(uniform(rng, lo, hi) * 2.0) / 2.0;
  }
  return uniform(rng, lo, hi);
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void fail(SuiteReport& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::vector<NodePair> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

AttackInstance random_attack_instance(Rng& rng, std::size_t max_deletable) {
  const std::size_t common = 1 + rng.uniform_below(8);
  const std::size_t extra = rng.uniform_below(7);
  const std::size_t n = 2 + common + extra;
  const auto first_extra = static_cast<NodeId>(2 + common);
  std::vector<NodePair> edges = {{0, 1}};
  for (NodeId w = 2; w < first_extra; ++w) {
    edges.emplace_back(0, w);
    edges.emplace_back(1, w);
  }
  for (NodeId x = first_extra; x < n; ++x) {
    // Never both endpoints, or x would become another common neighbor.
    const double r = rng.uniform01();
    if (r < 0.25) edges.emplace_back(0, x);
    else if (r < 0.5) edges.emplace_back(1, x);
  }
  for (NodeId u = 2; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(0.3)) edges.emplace_back(u, v);
    }
  }
  AttackInstance inst;
  inst.graph = Graph::from_edges(n, edges);

  std::vector<NodeId> nodes;
  const std::size_t size = 3 + rng.uniform_below(std::min<std::size_t>(n, 6) - 2);
  for (std::size_t i : rng.sample_indices(n, size)) {
    nodes.push_back(static_cast<NodeId>(i));
  }
  inst.targets = TargetSet::from_graph(inst.graph, nodes);

  std::vector<NodePair> tuple_edges;
  for (NodeId w = 2; w < first_extra; ++w) {
    tuple_edges.emplace_back(0, w);
    tuple_edges.emplace_back(1, w);
  }
  std::vector<NodePair> guarded;
  std::vector<NodePair> open;
  for (const NodePair& e : tuple_edges) {
    (rng.bernoulli(0.25) ? guarded : open).push_back(e);
  }
  while (open.size() > max_deletable) {
    const std::size_t i = rng.uniform_below(open.size());
    guarded.push_back(open[i]);
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
  }
  inst.plan = DefensePlan::make(guarded, guarded.size());
  inst.params.beta = uniform(rng, 0.5, 3.0);
  inst.params.theta = uniform(rng, 0.0, 1.5);
  return inst;
}

std::vector<DamageGraph> random_damage_graphs(Rng& rng,
                                              std::size_t max_samples,
                                              std::size_t max_edges) {
  constexpr NodeId kHubs = 3;
  constexpr NodeId kPool = 9;
  const std::size_t samples = 1 + rng.uniform_below(max_samples);
  std::vector<DamageGraph> out;
  std::vector<NodePair> seen;
  for (std::size_t s = 0; s < samples; ++s) {
    DamageGraph dg;
    const auto hubs = rng.sample_indices(kHubs, 2);
    dg.v1 = static_cast<NodeId>(std::min(hubs[0], hubs[1]));
    dg.v2 = static_cast<NodeId>(std::max(hubs[0], hubs[1]));
    dg.sample_index = s;
    std::vector<NodeId> ws;
    for (std::size_t i :
         rng.sample_indices(kPool - kHubs, 1 + rng.uniform_below(4))) {
      ws.push_back(static_cast<NodeId>(kHubs + i));
    }
    std::sort(ws.begin(), ws.end());
    for (NodeId w : ws) {
      DamageTuple t;
      t.w = w;
      t.c1 = coefficient(rng, -1.0, 2.0);
      t.c2 = coefficient(rng, -1.0, 2.0);
      std::vector<NodePair> grown = seen;
      grown.push_back(dg.edge1(t));
      grown.push_back(dg.edge2(t));
      canonicalize(grown);
      if (grown.size() > max_edges) break;
      seen = std::move(grown);
      dg.tuples.push_back(t);
    }
    if (dg.tuples.empty()) break;
    dg.deg1 = dg.tuples.size() + 1;
    dg.deg2 = dg.tuples.size() + 1;
    out.push_back(std::move(dg));
  }
  return out;
}

BinaryProgram random_program(Rng& rng, std::size_t max_vars) {
  BinaryProgram p;
  p.num_vars = 1 + rng.uniform_below(max_vars);
  p.budget = rng.uniform_below(p.num_vars + 1);
  p.constant = coefficient(rng, -1.0, 1.0);
  for (std::size_t i = 0; i < p.num_vars; ++i) {
    if (rng.bernoulli(0.8)) p.add_linear(i, coefficient(rng, -2.0, 2.0));
    for (std::size_t j = i + 1; j < p.num_vars; ++j) {
      if (rng.bernoulli(0.3)) p.add_pair(i, j, coefficient(rng, -2.0, 2.0));
    }
  }
  p.prune_zeros();
  return p;
}

SuiteReport verify_attacks(std::size_t instances, std::uint64_t seed,
                           std::vector<DiagnosticRow>* diagnostics) {
  SuiteReport r;
  r.name = "attacker optimality";
  Timer timer;
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(derive_seed(seed, 0, i));
    const AttackInstance inst = random_attack_instance(rng);
    const std::size_t k_attack =
        common_neighbors(inst.graph, inst.h_a.a(), inst.h_a.b()).size();
    for (MetricKind m : kAllMetrics) {
      const std::string tag = "instance " + std::to_string(i) + " metric " +
                              std::string(metric_name(m));
      const DamageGraph dg = build_damage_graph(
          inst.graph, inst.h_a, inst.targets, m, inst.params, inst.plan);
      const AttackPlan plan = linkdel(dg, m);
      const GraphView after(inst.graph, plan.deletions);
      const double sim = similarity(m, after, inst.h_a.a(), inst.h_a.b());

      const ExactAttackResult any =
          brute_attack(inst.graph, inst.h_a, inst.plan, m, k_attack,
                       inst.targets, inst.params, TupleRule::kUnrestricted);
      const ExactAttackResult one =
          brute_attack(inst.graph, inst.h_a, inst.plan, m, k_attack,
                       inst.targets, inst.params, TupleRule::kOnePerTuple);
      ++r.checked;
      if (!close(sim, any.min_similarity, 1e-12)) {
        fail(r, tag + ": linkdel similarity " + std::to_string(sim) +
                    " vs minimum " + std::to_string(any.min_similarity));
        continue;
      }
      const double scale =
          std::max(1.0, total_loss(inst.graph, inst.targets, m, inst.params));
      const double c = plan_damage(dg, plan);
      if (std::abs(c - one.min_independent_damage()) > 1e-9 * scale) {
        fail(r, tag + ": linkdel damage " + std::to_string(c) +
                    " vs minimum " +
                    std::to_string(one.min_independent_damage()));
      }
      if (diagnostics) {
        DiagnosticRow row = attack_diagnostic(diagnostics->size(), inst.graph,
                                              dg, plan, m, inst.targets,
                                              inst.params);
        diagnostics->push_back(row);
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport verify_ilp(std::size_t instances, std::size_t max_vars,
                       std::uint64_t seed) {
  SuiteReport r;
  r.name = "ilp exactness";
  Timer timer;
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(derive_seed(seed, 1, i));
    const BinaryProgram p = random_program(rng, max_vars);
    const Solution got = solve(p);
    const Solution want = brute_solve(p);
    ++r.checked;
    const std::string tag = "program " + std::to_string(i);
    if (got.status != SolveStatus::kOptimal) {
      fail(r, tag + ": not proven optimal");
    } else if (!p.feasible(got.assignment)) {
      fail(r, tag + ": infeasible assignment");
    } else if (std::abs(got.objective - p.evaluate(got.assignment)) > 1e-9) {
      fail(r, tag + ": reported objective differs from re-evaluation");
    } else if (std::abs(got.objective - want.objective) > 1e-9) {
      fail(r, tag + ": objective " + std::to_string(got.objective) +
                  " vs exhaustive " + std::to_string(want.objective));
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport verify_defenses(std::size_t instances, std::uint64_t seed) {
  SuiteReport r;
  r.name = "defense optimality";
  Timer timer;
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(derive_seed(seed, 2, i));
    const std::vector<DamageGraph> dgs = random_damage_graphs(rng);
    std::vector<NodePair> cand;
    for (const DamageGraph& dg : dgs) {
      for (const DamageTuple& t : dg.tuples) {
        cand.push_back(dg.edge1(t));
        cand.push_back(dg.edge2(t));
      }
    }
    canonicalize(cand);
    const std::size_t k_d = rng.uniform_below(cand.size() + 1);
    const DefensePlan plan = idopt(dgs, k_d);
    const BruteDefenseResult best = brute_defense_cheaper_side(dgs, k_d);
    const double got = expected_damage(dgs, plan);
    ++r.checked;
    if (plan.size() > k_d || plan.optimality_gap) {
      fail(r, "instance " + std::to_string(i) + ": plan over budget or open");
    } else if (std::abs(got - best.objective) > 1e-9) {
      fail(r, "instance " + std::to_string(i) + ": idopt " +
                  std::to_string(got) + " vs exhaustive " +
                  std::to_string(best.objective));
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport verify_gadgets(std::size_t exhaustive_max,
                           std::size_t random_instances,
                           std::size_t random_max, std::uint64_t seed) {
  SuiteReport r;
  r.name = "max-cut gadget";
  Timer timer;
  auto check = [&](const Graph& base) {
    const GadgetVerdict v = verify_gadget(gadget_from_graph(base));
    ++r.checked;
    if (!v.consistent) {
      fail(r, "base with " + std::to_string(base.num_nodes()) + " nodes, " +
                  std::to_string(base.num_edges()) + " edges: min_sh " +
                  std::to_string(v.min_sh) + ", maxcut " +
                  std::to_string(v.maxcut));
    }
  };
  for (std::size_t k = 0; k <= exhaustive_max; ++k) {
    std::vector<NodePair> all;
    for (NodeId u = 0; u < k; ++u) {
      for (NodeId v = u + 1; v < k; ++v) all.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size());
         ++mask) {
      std::vector<NodePair> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1U) edges.push_back(all[i]);
      }
      check(Graph::from_edges(k, edges));
    }
  }
  for (std::size_t i = 0; i < random_instances; ++i) {
    Rng rng(derive_seed(seed, 3, i));
    const std::size_t k = 1 + rng.uniform_below(random_max);
    check(random_graph(rng, k, uniform(rng, 0.2, 0.8)));
  }
  r.seconds = timer.seconds();
  return r;
}

}  // namespace rlp
