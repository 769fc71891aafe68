#include "sparsefw/privacy.h"

#include <cmath>
#include <stdexcept>

namespace sparsefw {
namespace {

double CompositionFactor(const PrivacyParams& p) {
  return std::sqrt(8.0 * static_cast<double>(p.t_max) *
                   std::log(1.0 / p.delta));
}

}  // namespace

void PrivacyParams::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (t_max < 1) throw std::invalid_argument("T must be at least 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be positive");
  }
  if (!(l > 0.0) || !std::isfinite(l)) {
    throw std::invalid_argument("Lipschitz constant must be positive");
  }
  if (n < 1) throw std::invalid_argument("row count must be at least 1");
}

double LaplaceScale(const PrivacyParams& p) {
  p.Validate();
  return p.lambda * p.l * CompositionFactor(p) /
         (static_cast<double>(p.n) * p.epsilon);
}

double ExpMechScale(const PrivacyParams& p) {
  p.Validate();
  return p.l * static_cast<double>(p.n) * p.epsilon /
         (2.0 * p.lambda * CompositionFactor(p));
}

double PerStepEpsilon(const PrivacyParams& p) {
  p.Validate();
  return p.epsilon / CompositionFactor(p);
}

double LaplaceFromUniform(double u, double scale) {
  if (u == 0.0) return 0.0;
  const double mag = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0.0 ? -mag : mag;
}

double SampleLaplace(double scale, RandomStream& rng) {
  return LaplaceFromUniform(UniformOpen01(rng) - 0.5, scale);
}

}  // namespace sparsefw
