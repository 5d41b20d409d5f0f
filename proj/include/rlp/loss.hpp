#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "rlp/graph.hpp"
#include "rlp/metrics.hpp"
#include "rlp/targets.hpp"

namespace rlp {

enum class LossKind { kExponential };

// l(sim | y) = exp(-y * beta * (sim - theta)).
struct LossParams {
  LossKind kind = LossKind::kExponential;
  double beta = 2.0;
  double theta = 0.0;
};

double pair_loss(double sim, int label, const LossParams& params);

// Sum of pair losses over the target pairs, similarities evaluated on `g`.
double total_loss(const GraphView& g, const TargetSet& targets, MetricKind m,
                  const LossParams& params);

// Mean total loss, summed in sample order. Throws std::invalid_argument for an
// empty list.
double average_loss(std::span<const LabeledGraph> samples, MetricKind m,
                    const LossParams& params);

// Thrown when the attack did not move the loss, leaving the ratio undefined.
class UndefinedDprError : public std::domain_error {
 public:
  UndefinedDprError(double l0, double la);
  double l0() const { return l0_; }
  double la() const { return la_; }

 private:
  double l0_;
  double la_;
};

inline constexpr double kDprDenominatorTolerance = 1e-12;

// Damage prevention ratio (la - ld) / (la - l0). Not capped at 1.
double dpr(double l0, double la, double ld);

// Midpoint between the mean similarity of edge pairs and of non-edge pairs
// across the (unattacked) samples. Throws std::invalid_argument when either
// class is absent.
double calibrate_theta(std::span<const LabeledGraph> samples, MetricKind m);

}  // namespace rlp
