#ifndef SPARSEFW_METRICS_H_
#define SPARSEFW_METRICS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sparsefw/dataset.h"

namespace sparsefw {

// Counts floating-point work in the numerical core. One unit per multiply,
// add, subtract, divide, exp or log. Selector bookkeeping is not counted here;
// it shows up as queue pops instead.
class FlopCounter {
 public:
  void Add(std::uint64_t n) { count_ += n; }
  std::uint64_t count() const { return count_; }
  void Reset() { count_ = 0; }

 private:
  std::uint64_t count_ = 0;
};

// One record per training iteration. `flops` and `q_pops` are the work done
// in that iteration; `elapsed_ms` is wall time since training started.
struct MetricsRow {
  std::uint64_t iteration = 0;
  double g = 0.0;
  std::uint64_t flops = 0;
  std::uint64_t q_pops = 0;
  double elapsed_ms = 0.0;

  bool operator==(const MetricsRow&) const = default;
};

using MetricsSink = std::function<void(const MetricsRow&)>;

// Header `iteration,g,flops,q_pops,elapsed_ms`; doubles are written in
// shortest round-trip form. Throws std::runtime_error on I/O failure.
void WriteMetricsCsv(std::span<const MetricsRow> rows,
                     const std::filesystem::path& path);
std::vector<MetricsRow> ReadMetricsCsv(const std::filesystem::path& path);

struct Evaluation {
  double accuracy = 0.0;
  // Empty when the labels are all one class.
  std::optional<double> auc;
  double sparsity = 0.0;
};

// Accuracy predicts 1 when sigma(x.w) >= 0.5, AUC is the Mann-Whitney rank
// statistic with midranks for ties, sparsity is the fraction of exact zeros
// in w. Throws std::invalid_argument on a width mismatch.
Evaluation Evaluate(const Dataset& data, std::span<const double> w);

// Mann-Whitney AUC of `scores` against binary `labels`; empty if either class
// is missing.
std::optional<double> RankAuc(std::span<const double> scores,
                              std::span<const int> labels);

}  // namespace sparsefw

#endif  // SPARSEFW_METRICS_H_
