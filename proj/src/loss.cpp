#include "rlp/loss.hpp"

#include <cmath>

namespace rlp {

double pair_loss(double sim, int label, const LossParams& params) {
  return std::exp(-static_cast<double>(label) * params.beta *
                  (sim - params.theta));
}

double total_loss(const GraphView& g, const TargetSet& targets, MetricKind m,
                  const LossParams& params) {
  double sum = 0.0;
  for (std::size_t i = 0; i < targets.pairs.size(); ++i) {
    const NodePair& p = targets.pairs[i];
    sum += pair_loss(similarity(m, g, p.a(), p.b()), targets.labels[i], params);
  }
  return sum;
}

double average_loss(std::span<const LabeledGraph> samples, MetricKind m,
                    const LossParams& params) {
  if (samples.empty()) {
    throw std::invalid_argument("average_loss: no samples");
  }
  double sum = 0.0;
  for (const LabeledGraph& s : samples) {
    sum += total_loss(s.graph, s.targets, m, params);
  }
  return sum / static_cast<double>(samples.size());
}

UndefinedDprError::UndefinedDprError(double l0, double la)
    : std::domain_error("dpr undefined: attacked loss " + std::to_string(la) +
                        " equals unattacked loss " + std::to_string(l0)),
      l0_(l0),
      la_(la) {}

double dpr(double l0, double la, double ld) {
  if (std::abs(la - l0) <= kDprDenominatorTolerance) {
    throw UndefinedDprError(l0, la);
  }
  return (la - ld) / (la - l0);
}

double calibrate_theta(std::span<const LabeledGraph> samples, MetricKind m) {
  double sum_pos = 0.0;
  double sum_neg = 0.0;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  for (const LabeledGraph& s : samples) {
    const GraphView view(s.graph);
    for (std::size_t i = 0; i < s.targets.pairs.size(); ++i) {
      const NodePair& p = s.targets.pairs[i];
      const double sim = similarity(m, view, p.a(), p.b());
      if (s.targets.labels[i] > 0) {
        sum_pos += sim;
        ++n_pos;
      } else {
        sum_neg += sim;
        ++n_neg;
      }
    }
  }
  if (n_pos == 0 || n_neg == 0) {
    throw std::invalid_argument(
        "calibrate_theta: need both edge and non-edge target pairs (got " +
        std::to_string(n_pos) + " edges, " + std::to_string(n_neg) +
        " non-edges)");
  }
  return 0.5 * (sum_pos / static_cast<double>(n_pos) +
                sum_neg / static_cast<double>(n_neg));
}

}  // namespace rlp
