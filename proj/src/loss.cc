#include "sparsefw/loss.h"

#include <stdexcept>
#include <string>

namespace sparsefw {
namespace {

void CheckWidth(const Dataset& data, std::span<const double> w) {
  if (w.size() != data.cols()) {
    throw std::invalid_argument(
        "weight vector has " + std::to_string(w.size()) +
        " entries, dataset has " + std::to_string(data.cols()) + " features");
  }
}

double RowDot(const Dataset& data, std::size_t i, std::span<const double> w) {
  double s = 0.0;
  for (const Entry& e : data.x.row(i)) s += e.value * w[e.index];
  return s;
}

}  // namespace

void LossSpec::Validate() const {
  if (!(lipschitz_l > 0.0) || !std::isfinite(lipschitz_l)) {
    throw std::invalid_argument("Lipschitz constant must be positive");
  }
}

double Objective(const Dataset& data, std::span<const double> w) {
  CheckWidth(data, w);
  if (data.rows() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    total += LogisticLoss(RowDot(data, i, w), data.y[i]);
  }
  return total / static_cast<double>(data.rows());
}

std::vector<double> ObjectiveGradient(const Dataset& data,
                                      std::span<const double> w) {
  CheckWidth(data, w);
  std::vector<double> grad(data.cols(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(data.rows());
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const double q = GradScalar(RowDot(data, i, w), data.y[i]) * inv_n;
    for (const Entry& e : data.x.row(i)) grad[e.index] += q * e.value;
  }
  return grad;
}

}  // namespace sparsefw
