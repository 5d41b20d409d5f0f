#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rlp/graph.hpp"

namespace rlp {

// Reliable queries chosen by the defender: node pairs the attacker cannot
// delete.
struct DefensePlan {
  std::vector<NodePair> protected_pairs;  // canonical, ascending, unique
  std::size_t budget = 0;
  // Set when the planner stopped before proving optimality.
  std::optional<double> optimality_gap;
  // Set when an odd budget left a single protection slot that was spent on
  // one side of a tuple.
  bool single_slot_spent = false;
  // Number of damage-graph edge occurrences (over all samples) covered by the
  // plan; protected_pairs.size() counts each edge once.
  std::size_t covered_occurrences = 0;

  // Canonicalizes `pairs`. Throws std::invalid_argument when more than
  // `budget` distinct pairs remain.
  static DefensePlan make(std::vector<NodePair> pairs, std::size_t budget);
  static DefensePlan empty() { return {}; }

  bool protects(const NodePair& p) const;
  std::size_t size() const { return protected_pairs.size(); }
};

enum class AttackKind { kLinkDel, kUnbiasedDel, kRandDel };

std::string_view attack_name(AttackKind k);
AttackKind parse_attack(std::string_view name);

// Edges removed by the attacker.
struct AttackPlan {
  AttackKind kind = AttackKind::kLinkDel;
  std::vector<NodePair> deletions;  // canonical, ascending
};

}  // namespace rlp
