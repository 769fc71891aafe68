#ifndef SPARSEFW_BASELINE_H_
#define SPARSEFW_BASELINE_H_

#include "sparsefw/dataset.h"
#include "sparsefw/metrics.h"
#include "sparsefw/train_config.h"

namespace sparsefw {

// Standard sparse-aware Frank-Wolfe over the L1 ball of radius lambda. Every
// iteration recomputes Xw, the row gradients and X^T q from scratch and scans
// all D coordinates, so the cost per step is O(N S_c + D).
//
// Nonprivate mode selects argmax_j |alpha_j| (lowest index on ties). Private
// mode selects argmax_j |alpha_j + Lap(b)| with b = LaplaceScale. Gradients
// carry the 1/N normalization of the mean loss.
//
// Throws std::invalid_argument for invalid data or configuration and
// std::runtime_error if a gradient becomes non-finite.
TrainResult TrainBaseline(const Dataset& data, const TrainConfig& config,
                          RandomStream& rng, const MetricsSink& sink = {});

}  // namespace sparsefw

#endif  // SPARSEFW_BASELINE_H_
