#ifndef SPARSEFW_FAST_H_
#define SPARSEFW_FAST_H_

#include <cstddef>
#include <memory>
#include <vector>

#include "sparsefw/dataset.h"
#include "sparsefw/metrics.h"
#include "sparsefw/selector.h"
#include "sparsefw/train_config.h"

namespace sparsefw {

// Trainer state for the sparse-update Frank-Wolfe loop. The actual weights
// are w_m * w and the actual row scores are w_m * v_bar, so the uniform
// (1 - eta) shrink of every coefficient costs O(1).
//
// Consistency between steps (up to rounding):
//   w_m * v_bar = X (w_m * w)
//   q_bar       = sigma(w_m * v_bar) / N
//   alpha       = X^T q_bar - y_bar
//   g_tilde     = <alpha, w_m * w>
struct ModelState {
  std::vector<double> w;
  double w_m = 1.0;
  std::vector<double> v_bar;
  std::vector<double> q_bar;
  std::vector<double> alpha;
  double g_tilde = 0.0;
  std::vector<double> y_bar;
  // Coordinates ever touched by an update; used to fold w_m back into w.
  std::vector<std::size_t> support;
  // Rows containing at least one support coordinate, i.e. the only rows whose
  // score can be nonzero.
  std::vector<std::size_t> active_rows;
  std::vector<char> row_active;
  std::vector<std::size_t> touched_rows;  // scratch
  std::size_t folds = 0;

  std::vector<double> ActualWeights() const;
};

struct StepResult {
  std::size_t selected = 0;
  double gap = 0.0;
};

// Zero weights, one dense gradient pass, and every coordinate added to the
// selector with priority |alpha_j| * scale. O(N S_c + D).
ModelState InitState(const Dataset& data, CoordinateSelector& selector,
                     double scale, FlopCounter* flops = nullptr);

// Applies the Frank-Wolfe move towards vertex -lambda sign(alpha_j) e_j at
// iteration t. Scores move only for rows containing feature j; row gradients
// are refreshed for the rows selected by `refresh` and their change is pushed
// through alpha and g_tilde along those rows' columns. Every touched
// coordinate's priority is then re-pushed to the selector. Returns the gap
// g_t = g_tilde - d alpha_j measured before the move. Folds w_m into w when
// it drops below `fold_threshold`.
StepResult ApplyUpdate(ModelState& state, const Dataset& data,
                       CoordinateSelector& selector, std::size_t j,
                       std::size_t t, double lambda, double scale,
                       RowRefresh refresh = RowRefresh::kSparse,
                       double fold_threshold = 1e-100,
                       FlopCounter* flops = nullptr);

// Asks the selector for the next coordinate and applies the update.
StepResult FastStep(ModelState& state, const Dataset& data,
                    CoordinateSelector& selector, std::size_t t, double lambda,
                    double scale, RandomStream& rng,
                    RowRefresh refresh = RowRefresh::kSparse,
                    double fold_threshold = 1e-100,
                    FlopCounter* flops = nullptr);

// Multiplies w_m into w and v_bar and resets it to 1.
void FoldScale(ModelState& state);

// Builds the selector for `config`. Throws std::invalid_argument if the
// selector kind and privacy mode are incompatible (lazy heap is nonprivate
// only; BLS and noisy-max are private only). `priority_scale` receives the
// multiplier applied to |alpha_j|.
std::unique_ptr<CoordinateSelector> MakeSelector(const TrainConfig& config,
                                                 std::size_t rows,
                                                 std::size_t cols,
                                                 double* priority_scale);

// Full fast training run: InitState then T - 1 FastSteps. Returns the actual
// weights w_m * w.
TrainResult TrainFast(const Dataset& data, const TrainConfig& config,
                      RandomStream& rng, const MetricsSink& sink = {});

}  // namespace sparsefw

#endif  // SPARSEFW_FAST_H_
