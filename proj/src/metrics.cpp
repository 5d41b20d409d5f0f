#include "rlp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rlp {

MetricClass metric_class(MetricKind m) {
  switch (m) {
    case MetricKind::kCommonNeighbors:
    case MetricKind::kAdamicAdar:
    case MetricKind::kResourceAllocation:
    case MetricKind::kJaccard:
    case MetricKind::kSorensen:
      return MetricClass::kSymmetric;
    case MetricKind::kSalton:
    case MetricKind::kHubPromoted:
    case MetricKind::kHubDepressed:
    case MetricKind::kLeichtHolmeNewman:
      return MetricClass::kAsymmetric;
  }
  throw std::logic_error("metric_class: unknown metric");
}

std::string_view metric_name(MetricKind m) {
  switch (m) {
    case MetricKind::kCommonNeighbors: return "cn";
    case MetricKind::kAdamicAdar: return "aa";
    case MetricKind::kResourceAllocation: return "ra";
    case MetricKind::kJaccard: return "jaccard";
    case MetricKind::kSorensen: return "sorensen";
    case MetricKind::kSalton: return "salton";
    case MetricKind::kHubPromoted: return "hpi";
    case MetricKind::kHubDepressed: return "hdi";
    case MetricKind::kLeichtHolmeNewman: return "lhn";
  }
  throw std::logic_error("metric_name: unknown metric");
}

MetricKind parse_metric(std::string_view name) {
  for (MetricKind m : kAllMetrics) {
    if (metric_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown metric '" + std::string(name) +
                              "' (expected cn, aa, ra, jaccard, sorensen, "
                              "salton, hpi, hdi, lhn)");
}

double similarity_from_counts(MetricKind m, std::size_t common,
                              std::size_t d1, std::size_t d2) {
  const double n = static_cast<double>(common);
  const double a = static_cast<double>(d1);
  const double b = static_cast<double>(d2);
  auto ratio = [&](double num, double den) { return den > 0 ? num / den : 0.0; };
  switch (m) {
    case MetricKind::kCommonNeighbors: return n;
    case MetricKind::kJaccard: return ratio(n, a + b - n);
    case MetricKind::kSorensen: return ratio(2.0 * n, a + b);
    case MetricKind::kSalton: return ratio(n, std::sqrt(a * b));
    case MetricKind::kHubPromoted: return ratio(n, std::min(a, b));
    case MetricKind::kHubDepressed: return ratio(n, std::max(a, b));
    case MetricKind::kLeichtHolmeNewman: return ratio(n, a * b);
    case MetricKind::kAdamicAdar:
    case MetricKind::kResourceAllocation:
      break;
  }
  throw std::invalid_argument("similarity_from_counts: metric '" +
                              std::string(metric_name(m)) +
                              "' depends on common-neighbor degrees");
}

double similarity(MetricKind m, const GraphView& g, NodeId u, NodeId v) {
  const std::vector<NodeId> common = common_neighbors(g, u, v);
  switch (m) {
    case MetricKind::kAdamicAdar: {
      double s = 0.0;
      for (NodeId w : common) {
        s += 1.0 / std::log(static_cast<double>(g.degree(w)));
      }
      return s;
    }
    case MetricKind::kResourceAllocation: {
      double s = 0.0;
      for (NodeId w : common) s += 1.0 / static_cast<double>(g.degree(w));
      return s;
    }
    default:
      return similarity_from_counts(m, common.size(), g.degree(u),
                                    g.degree(v));
  }
}

}  // namespace rlp
