#include "sparsefw/fast.h"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sparsefw/lazy_heap.h"
#include "sparsefw/loss.h"
#include "sparsefw/privacy.h"
#include "sparsefw/sampler.h"

namespace sparsefw {
namespace {

void Count(FlopCounter* flops, std::uint64_t n) {
  if (flops != nullptr) flops->Add(n);
}

}  // namespace

std::vector<double> ModelState::ActualWeights() const {
  std::vector<double> out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = w_m * w[k];
  return out;
}

ModelState InitState(const Dataset& data, CoordinateSelector& selector,
                     double scale, FlopCounter* flops) {
  data.Validate();
  if (data.rows() == 0) throw std::invalid_argument("dataset has no rows");
  const std::size_t n = data.rows();
  const std::size_t d = data.cols();
  const double inv_n = 1.0 / static_cast<double>(n);

  ModelState s;
  s.w.assign(d, 0.0);
  s.w_m = 1.0;
  s.g_tilde = 0.0;
  s.v_bar.assign(n, 0.0);
  s.q_bar.assign(n, Sigmoid(0.0) * inv_n);
  s.y_bar.assign(d, 0.0);
  s.alpha.assign(d, 0.0);
  s.row_active.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Entry& e : data.x.row(i)) {
      s.alpha[e.index] += e.value * s.q_bar[i];
      if (data.y[i] == 1) s.y_bar[e.index] += e.value * inv_n;
    }
  }
  for (std::size_t k = 0; k < d; ++k) s.alpha[k] -= s.y_bar[k];
  Count(flops, 4 * data.x.nnz() + 2 * n + d);

  for (std::size_t k = 0; k < d; ++k) {
    selector.Add(k, std::abs(s.alpha[k]) * scale);
  }
  Count(flops, 2 * d);
  return s;
}

void FoldScale(ModelState& state) {
  for (std::size_t k : state.support) state.w[k] *= state.w_m;
  for (double& v : state.v_bar) v *= state.w_m;
  state.w_m = 1.0;
  ++state.folds;
}

StepResult ApplyUpdate(ModelState& state, const Dataset& data,
                       CoordinateSelector& selector, std::size_t j,
                       std::size_t t, double lambda, double scale,
                       RowRefresh refresh, double fold_threshold,
                       FlopCounter* flops) {
  if (j >= state.w.size()) {
    throw std::invalid_argument("selected coordinate out of range");
  }
  const double alpha_j = state.alpha[j];
  if (!std::isfinite(alpha_j)) {
    throw std::runtime_error("non-finite gradient at feature " +
                             std::to_string(j));
  }
  const double inv_n = 1.0 / static_cast<double>(data.rows());

  // Scalar bookkeeping: gap, shrink, single-coordinate move.
  const double vertex = -lambda * VertexSign(alpha_j);
  const double gap = state.g_tilde - vertex * alpha_j;
  const double eta = StepSize(t);
  state.w_m *= 1.0 - eta;
  if (state.w[j] == 0.0) state.support.push_back(j);
  state.w[j] += eta * vertex / state.w_m;
  state.g_tilde = state.g_tilde * (1.0 - eta) + eta * vertex * alpha_j;
  Count(flops, 14);

  // Rows containing feature j see their score move.
  const double score_step = eta * vertex / state.w_m;
  for (const Entry& cell : data.x.col(j)) {
    state.v_bar[cell.index] += score_step * cell.value;
    if (!state.row_active[cell.index]) {
      state.row_active[cell.index] = 1;
      state.active_rows.push_back(cell.index);
    }
  }
  Count(flops, 2 * data.x.col(j).size());

  // Push each refreshed row's change in loss derivative through alpha and
  // g_tilde.
  std::vector<std::size_t>& touched = state.touched_rows;
  touched.clear();
  auto refresh_row = [&](std::size_t i) {
    const double gamma =
        Sigmoid(state.w_m * state.v_bar[i]) * inv_n - state.q_bar[i];
    Count(flops, 6);
    if (gamma == 0.0) return;
    state.q_bar[i] += gamma;
    double row_dot = 0.0;
    const auto row = data.x.row(i);
    for (const Entry& e : row) {
      state.alpha[e.index] += gamma * e.value;
      row_dot += e.value * state.w[e.index];
    }
    state.g_tilde += gamma * row_dot * state.w_m;
    Count(flops, 4 + 4 * row.size());
    touched.push_back(i);
  };
  if (refresh == RowRefresh::kExact) {
    for (std::size_t i : state.active_rows) refresh_row(i);
  } else {
    for (const Entry& cell : data.x.col(j)) refresh_row(cell.index);
  }

  // Second pass pushes final priorities once the row loop is done.
  for (std::size_t i : touched) {
    for (const Entry& e : data.x.row(i)) {
      selector.Update(e.index, std::abs(state.alpha[e.index]) * scale);
    }
  }

  if (state.w_m < fold_threshold) FoldScale(state);
  return {j, gap};
}

StepResult FastStep(ModelState& state, const Dataset& data,
                    CoordinateSelector& selector, std::size_t t, double lambda,
                    double scale, RandomStream& rng, RowRefresh refresh,
                    double fold_threshold, FlopCounter* flops) {
  const PriorityFn truth = [&state, scale](std::size_t k) {
    return std::abs(state.alpha[k]) * scale;
  };
  const std::size_t j = selector.GetNext(truth, rng);
  return ApplyUpdate(state, data, selector, j, t, lambda, scale, refresh,
                     fold_threshold, flops);
}

std::unique_ptr<CoordinateSelector> MakeSelector(const TrainConfig& config,
                                                 std::size_t rows,
                                                 std::size_t cols,
                                                 double* priority_scale) {
  switch (config.selector) {
    case SelectorKind::kLazyHeap:
      if (config.private_mode) {
        throw std::invalid_argument(
            "the lazy heap selector is exact and cannot be used in private "
            "mode");
      }
      *priority_scale = 1.0;
      return std::make_unique<LazyMaxHeap>(cols);
    case SelectorKind::kBls:
      if (!config.private_mode) {
        throw std::invalid_argument("the BLS sampler requires private mode");
      }
      *priority_scale = ExpMechScale(config.Privacy(rows));
      return std::make_unique<BlsSampler>(cols);
    case SelectorKind::kNoisyMax:
      if (!config.private_mode) {
        throw std::invalid_argument(
            "the noisy-max selector requires private mode");
      }
      *priority_scale = 1.0;
      return std::make_unique<NoisyMaxSelector>(
          cols, LaplaceScale(config.Privacy(rows)));
  }
  throw std::invalid_argument("unknown selector kind");
}

TrainResult TrainFast(const Dataset& data, const TrainConfig& config,
                      RandomStream& rng, const MetricsSink& sink) {
  data.Validate();
  config.Validate();
  if (data.rows() == 0) throw std::invalid_argument("dataset has no rows");
  double scale = 1.0;
  auto selector = MakeSelector(config, data.rows(), data.cols(), &scale);

  TrainResult result;
  if (config.iterations < 2) {
    result.weights.assign(data.cols(), 0.0);
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  FlopCounter init_flops;
  ModelState state = InitState(data, *selector, scale, &init_flops);
  std::uint64_t carried_flops = init_flops.count();
  for (std::size_t t = 1; t < config.iterations; ++t) {
    FlopCounter flops;
    flops.Add(carried_flops);
    carried_flops = 0;
    const std::uint64_t pops_before = selector->pops();
    const StepResult step =
        FastStep(state, data, *selector, t, config.lambda, scale, rng,
                 config.refresh, config.fold_threshold, &flops);
    const std::uint64_t pops = selector->pops() - pops_before;

    result.selections.push_back(step.selected);
    result.gaps.push_back(step.gap);
    result.total_flops += flops.count();
    result.total_pops += pops;
    if (sink) {
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      sink({t, step.gap, flops.count(), pops, elapsed.count()});
    }
  }
  result.weights = state.ActualWeights();
  return result;
}

}  // namespace sparsefw
