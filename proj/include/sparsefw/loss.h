#ifndef SPARSEFW_LOSS_H_
#define SPARSEFW_LOSS_H_

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "sparsefw/dataset.h"

namespace sparsefw {

// L1-Lipschitz constant of the scalar loss. The logistic derivative is
// bounded by 1, so the default holds whenever every |x_ij| <= 1.
struct LossSpec {
  double lipschitz_l = 1.0;

  void Validate() const;
};

// Logistic function, evaluated without overflow for any finite input.
inline double Sigmoid(double v) {
  if (v >= 0.0) return 1.0 / (1.0 + std::exp(-v));
  const double e = std::exp(v);
  return e / (1.0 + e);
}

// d/dv of the logistic loss at margin v for label y in {0, 1}: sigma(v) - y.
inline double GradScalar(double v, int y) { return Sigmoid(v) - y; }

// log(1 + e^v) - y*v.
inline double LogisticLoss(double v, int y) {
  const double softplus = std::max(v, 0.0) + std::log1p(std::exp(-std::abs(v)));
  return softplus - y * v;
}

// Mean logistic loss (1/N) sum_i L(w . x_i). Throws std::invalid_argument
// if w has the wrong length.
double Objective(const Dataset& data, std::span<const double> w);

// Full gradient (1/N) X^T (sigma(Xw) - y); used by tests and diagnostics.
std::vector<double> ObjectiveGradient(const Dataset& data,
                                      std::span<const double> w);

}  // namespace sparsefw

#endif  // SPARSEFW_LOSS_H_
