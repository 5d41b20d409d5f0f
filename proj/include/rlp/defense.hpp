#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rlp/damage.hpp"
#include "rlp/graph.hpp"
#include "rlp/ilp.hpp"
#include "rlp/plans.hpp"
#include "rlp/rng.hpp"
#include "rlp/targets.hpp"

namespace rlp {

enum class DefenseKind { kNone, kIdOpt, kIdRank, kPpn };

// none, idopt, idrank, ppn
std::string_view defense_name(DefenseKind k);
DefenseKind parse_defense(std::string_view name);

// Existing edges with exactly one endpoint among the target nodes.
struct CriticalEdgeSet {
  std::vector<NodePair> edges;  // ascending
};

CriticalEdgeSet critical_edges(const Graph& g, const TargetSet& targets);

// Expected damage of `plan` summed over the damage graphs when every sample is
// attacked by the lower-damage rule: a tuple with both edges protected costs
// nothing, one protected edge costs the other edge's damage, and an open tuple
// costs min(c1, c2). Protection flags already on the graphs are ignored.
double expected_damage(std::span<const DamageGraph> graphs,
                       const DefensePlan& plan);

// Tuple edge occurrences (counted per sample) that `plan` protects.
std::size_t covered_occurrences(std::span<const DamageGraph> graphs,
                                const DefensePlan& plan);

// Minimizes expected_damage over plans of at most k_D edges by solving the
// damage program exactly. The search is warm-started with the idrank plan, so
// the result is never worse than it. When the solver limits stop the search
// the incumbent is returned and optimality_gap is set.
DefensePlan idopt(std::span<const DamageGraph> graphs, std::size_t k_d,
                  const SolverLimits& limits = {});

// Every tuple with positive min(c1, c2) adds that value to the importance of
// both of its edges; the k_D most important edges are protected (ties by
// ascending pair).
DefensePlan idrank(std::span<const DamageGraph> graphs, std::size_t k_d);

// Uniform sample of min(k_D, |E_c|) critical edges.
DefensePlan ppn(const CriticalEdgeSet& critical, std::size_t k_d, Rng& rng);

}  // namespace rlp
