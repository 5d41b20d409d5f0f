#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "rlp/graph.hpp"

namespace rlp {

enum class MetricKind {
  kCommonNeighbors,
  kAdamicAdar,
  kResourceAllocation,
  kJaccard,
  kSorensen,
  kSalton,
  kHubPromoted,
  kHubDepressed,
  kLeichtHolmeNewman,
};

inline constexpr std::array<MetricKind, 9> kAllMetrics = {
    MetricKind::kCommonNeighbors, MetricKind::kAdamicAdar,
    MetricKind::kResourceAllocation, MetricKind::kJaccard,
    MetricKind::kSorensen, MetricKind::kSalton,
    MetricKind::kHubPromoted, MetricKind::kHubDepressed,
    MetricKind::kLeichtHolmeNewman};

// Symmetric metrics are indifferent to how the attacker splits deletions
// between the two target endpoints; asymmetric ones are not.
enum class MetricClass { kSymmetric, kAsymmetric };

MetricClass metric_class(MetricKind m);

// Lowercase config names: cn, aa, ra, jaccard, sorensen, salton, hpi, hdi, lhn.
std::string_view metric_name(MetricKind m);
// Throws std::invalid_argument for unknown names.
MetricKind parse_metric(std::string_view name);

// Local similarity of (u, v). Adamic-Adar uses the natural logarithm. Ratio
// metrics return 0 when the denominator vanishes (then no common neighbor can
// exist either). Throws std::invalid_argument when u == v.
double similarity(MetricKind m, const GraphView& g, NodeId u, NodeId v);

// Similarity of the degree-ratio metrics from counts alone:
// common / f(d1, d2). Valid for every metric except Adamic-Adar and Resource
// Allocation, whose value depends on the common neighbors' degrees.
double similarity_from_counts(MetricKind m, std::size_t common,
                              std::size_t d1, std::size_t d2);

}  // namespace rlp
