#ifndef SPARSEFW_PRIVACY_H_
#define SPARSEFW_PRIVACY_H_

#include <cstddef>

#include "sparsefw/random.h"

namespace sparsefw {

// Everything the (epsilon, delta) accounting depends on. All logarithms are
// natural. There is deliberately no default for delta.
struct PrivacyParams {
  double epsilon = 0.0;
  double delta = 0.0;
  std::size_t t_max = 0;  // T, total iterations
  double lambda = 0.0;    // L1-ball radius
  double l = 1.0;         // Lipschitz constant of the loss
  std::size_t n = 0;      // training rows

  // Throws std::invalid_argument unless epsilon > 0, 0 < delta < 1, T >= 1,
  // lambda > 0, L > 0 and n >= 1.
  void Validate() const;
};

// Scale of the per-coordinate Laplace noise for report-noisy-max:
//   lambda * L * sqrt(8 T ln(1/delta)) / (N epsilon).
// The per-row sensitivity of the normalized gradient is L lambda / N and each
// step spends epsilon' = epsilon / sqrt(8 T ln(1/delta)).
double LaplaceScale(const PrivacyParams& p);

// Multiplier turning |alpha_j| into an exponential-mechanism log-weight:
//   L N epsilon / (2 lambda sqrt(8 T ln(1/delta))).
double ExpMechScale(const PrivacyParams& p);

// Per-iteration budget under advanced composition: epsilon / sqrt(8 T
// ln(1/delta)).
double PerStepEpsilon(const PrivacyParams& p);

// Inverse CDF of a zero-mean Laplace(scale) at u in (-1/2, 1/2).
double LaplaceFromUniform(double u, double scale);

// Zero-mean Laplace draw with the given scale.
double SampleLaplace(double scale, RandomStream& rng);

}  // namespace sparsefw

#endif  // SPARSEFW_PRIVACY_H_
