#include "sparsefw/baseline.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsefw/loss.h"
#include "sparsefw/privacy.h"

namespace sparsefw {

TrainResult TrainBaseline(const Dataset& data, const TrainConfig& config,
                          RandomStream& rng, const MetricsSink& sink) {
  data.Validate();
  config.Validate();
  if (data.rows() == 0) throw std::invalid_argument("dataset has no rows");
  const std::size_t n = data.rows();
  const std::size_t d = data.cols();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double noise_scale =
      config.private_mode ? LaplaceScale(config.Privacy(n)) : 0.0;
  const std::uint64_t nnz = data.x.nnz();

  const auto start = std::chrono::steady_clock::now();
  TrainResult result;
  std::vector<double> w(d, 0.0);
  std::vector<double> scores(n);
  std::vector<double> row_grad(n);
  std::vector<double> alpha(d);
  std::vector<double> direction(d);

  // y_bar = (1/N) X^T y, computed once.
  std::vector<double> y_bar(d, 0.0);
  std::uint64_t setup_flops = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (data.y[i] == 0) continue;
    for (const Entry& e : data.x.row(i)) {
      y_bar[e.index] += e.value * inv_n;
      setup_flops += 2;
    }
  }

  for (std::size_t t = 1; t < config.iterations; ++t) {
    FlopCounter flops;
    flops.Add(setup_flops);
    setup_flops = 0;

    // v = X w
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (const Entry& e : data.x.row(i)) s += e.value * w[e.index];
      scores[i] = s;
    }
    flops.Add(2 * nnz);

    // q = sigma(v) / N
    for (std::size_t i = 0; i < n; ++i)
      row_grad[i] = Sigmoid(scores[i]) * inv_n;
    flops.Add(4 * n);

    // alpha = X^T q - y_bar
    std::fill(alpha.begin(), alpha.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const Entry& e : data.x.row(i))
        alpha[e.index] += e.value * row_grad[i];
    }
    for (std::size_t k = 0; k < d; ++k) alpha[k] -= y_bar[k];
    flops.Add(2 * nnz + d);

    // Linear scan over all D features; reported as D queue pops.
    std::size_t j = 0;
    double best = -1.0;
    for (std::size_t k = 0; k < d; ++k) {
      if (!std::isfinite(alpha[k])) {
        throw std::runtime_error("non-finite gradient at feature " +
                                 std::to_string(k));
      }
      const double value =
          config.private_mode
              ? std::abs(alpha[k] + SampleLaplace(noise_scale, rng))
              : std::abs(alpha[k]);
      if (value > best) {
        best = value;
        j = k;
      }
    }
    flops.Add(config.private_mode ? 4 * d : d);

    // d = -w, d_j -= lambda sign(alpha_j), g = -<alpha, d>
    for (std::size_t k = 0; k < d; ++k) direction[k] = -w[k];
    direction[j] -= config.lambda * VertexSign(alpha[j]);
    double gap = 0.0;
    for (std::size_t k = 0; k < d; ++k) gap -= alpha[k] * direction[k];
    flops.Add(d + 2 + 2 * d);

    const double eta = StepSize(t);
    for (std::size_t k = 0; k < d; ++k) w[k] += eta * direction[k];
    flops.Add(2 + 2 * d);

    result.selections.push_back(j);
    result.gaps.push_back(gap);
    result.total_flops += flops.count();
    result.total_pops += d;
    if (sink) {
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      sink({t, gap, flops.count(), d, elapsed.count()});
    }
  }
  result.weights = std::move(w);
  return result;
}

}  // namespace sparsefw
