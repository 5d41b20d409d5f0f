#include "rlp/plans.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rlp {

DefensePlan DefensePlan::make(std::vector<NodePair> pairs,
                              std::size_t budget) {
  canonicalize(pairs);
  if (pairs.size() > budget) {
    throw std::invalid_argument("DefensePlan: " + std::to_string(pairs.size()) +
                                " pairs exceed budget " +
                                std::to_string(budget));
  }
  DefensePlan plan;
  plan.protected_pairs = std::move(pairs);
  plan.budget = budget;
  return plan;
}

bool DefensePlan::protects(const NodePair& p) const {
  return std::binary_search(protected_pairs.begin(), protected_pairs.end(), p);
}

std::string_view attack_name(AttackKind k) {
  switch (k) {
    case AttackKind::kLinkDel: return "linkdel";
    case AttackKind::kUnbiasedDel: return "unbiaseddel";
    case AttackKind::kRandDel: return "randdel";
  }
  throw std::logic_error("attack_name: unknown attack");
}

AttackKind parse_attack(std::string_view name) {
  for (AttackKind k :
       {AttackKind::kLinkDel, AttackKind::kUnbiasedDel, AttackKind::kRandDel}) {
    if (attack_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown attack '" + std::string(name) +
                              "' (expected linkdel, unbiaseddel, randdel)");
}

}  // namespace rlp
