#ifndef SPARSEFW_TRAIN_CONFIG_H_
#define SPARSEFW_TRAIN_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sparsefw/privacy.h"
#include "sparsefw/selector.h"

namespace sparsefw {

// Which rows the fast trainer re-evaluates after each move.
//   kExact:  every row with a nonzero score, since the uniform (1 - eta)
//            shrink moves all of them. Keeps the state equal to a dense
//            recomputation; O(active rows * S_c) per step.
//   kSparse: only rows containing the selected feature. O(S_r * S_c) per step
//            but gradients of other active rows go stale.
enum class RowRefresh { kExact, kSparse };

// Settings shared by both Frank-Wolfe trainers. epsilon and delta are only
// read in private mode and have no defaults.
struct TrainConfig {
  double lambda = 50.0;
  std::size_t iterations = 4000;  // T; the loop runs t = 1 .. T-1
  double lipschitz = 1.0;
  bool private_mode = false;
  double epsilon = 0.0;
  double delta = 0.0;
  SelectorKind selector = SelectorKind::kLazyHeap;
  RowRefresh refresh = RowRefresh::kSparse;
  // Fast trainer folds w_m into the stored coefficients below this value.
  double fold_threshold = 1e-100;

  // Throws std::invalid_argument unless lambda > 0, T >= 1 and L > 0.
  void Validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (iterations < 1) throw std::invalid_argument("T must be at least 1");
    if (!(lipschitz > 0.0)) {
      throw std::invalid_argument("Lipschitz constant must be positive");
    }
  }

  // Privacy parameters for a dataset with `rows` rows. Throws
  // std::invalid_argument when they are invalid.
  PrivacyParams Privacy(std::size_t rows) const {
    PrivacyParams p;
    p.epsilon = epsilon;
    p.delta = delta;
    p.t_max = iterations;
    p.lambda = lambda;
    p.l = lipschitz;
    p.n = rows;
    p.Validate();
    return p;
  }
};

struct TrainResult {
  std::vector<double> weights;          // actual coefficients
  std::vector<std::size_t> selections;  // coordinate chosen at each t
  std::vector<double> gaps;             // g_t at each t
  std::uint64_t total_flops = 0;
  std::uint64_t total_pops = 0;
};

// Step size at iteration t >= 1.
inline double StepSize(std::size_t t) {
  return 2.0 / (static_cast<double>(t) + 2.0);
}

// sign with sign(0) = +1, so the chosen vertex is always a true vertex.
inline double VertexSign(double x) { return x >= 0.0 ? 1.0 : -1.0; }

}  // namespace sparsefw

#endif  // SPARSEFW_TRAIN_CONFIG_H_
