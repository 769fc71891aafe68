#ifndef SPARSEFW_SAMPLER_H_
#define SPARSEFW_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sparsefw/selector.h"

namespace sparsefw {

// log(sum_j exp(v_j)), shifted by the maximum. Returns -inf for an empty
// input or when every entry is -inf.
double LogSumExp(std::span<const double> v);

// Exact softmax draw by inverse CDF over the normalized weights. O(D).
std::size_t OracleSample(std::span<const double> log_weights,
                         RandomStream& rng);

// argmax_j (priority_j + Lap(scale)) with fresh noise per coordinate; scale 0
// disables the noise. Ties go to the lower index.
std::size_t NoisyMaxGetNext(std::span<const double> priorities, double scale,
                            RandomStream& rng);

// Exponential-mechanism selector: draws j with probability proportional to
// exp(v_j) using a single A-ExpJ weighted-reservoir pass (reservoir size 1)
// over contiguous groups of ceil(sqrt(D)) items. A group whose remaining
// weight is below the current jump budget is skipped whole; otherwise its
// items are scanned one at a time.
//
// Group and total log-sums are maintained in O(1) per update with the
// replace-one-term identity
//   c <- c + log(1 - e^{v_old - c} + e^{v_new - c}),
// and recomputed exactly every D updates, or immediately for the affected
// group when the log argument cancels below kCancellationFloor.
//
// All items must be added before the first draw. For D < 4 draws fall back to
// OracleSample.
class BlsSampler final : public CoordinateSelector {
 public:
  // Normalized weight floor so items whose exp(v - z) underflows can still be
  // drawn.
  static constexpr double kWeightFloor = 1e-15;
  static constexpr double kCancellationFloor = 1e-4;

  explicit BlsSampler(std::size_t size);

  void Add(std::size_t index, double log_weight) override;
  void Update(std::size_t index, double log_weight) override;
  // `true_priority` is ignored; the stored log-weights are current.
  std::size_t GetNext(const PriorityFn& true_priority,
                      RandomStream& rng) override;
  std::uint64_t pops() const override { return inspected_; }

  std::size_t Sample(RandomStream& rng);

  // Exact recomputation of every group sum and the total.
  void Rebuild();

  std::size_t size() const { return v_.size(); }
  std::size_t group_size() const { return group_size_; }
  std::size_t group_count() const { return c_.size(); }
  double log_weight(std::size_t j) const { return v_[j]; }
  double group_log_sum(std::size_t k) const { return c_[k]; }
  double log_total() const { return z_; }
  std::span<const double> log_weights() const { return v_; }

  // Weight an item carries in the scan: exp(v_j - z) + kWeightFloor.
  double ItemWeight(std::size_t j) const;

 private:
  double GroupWeight(std::size_t k) const;
  void RebuildGroup(std::size_t k);
  void RebuildTotal();

  std::vector<double> v_;
  std::size_t group_size_;
  std::vector<double> c_;
  double z_ = 0.0;
  std::size_t added_ = 0;
  std::vector<char> present_;
  bool dirty_ = true;
  std::size_t updates_since_rebuild_ = 0;
  std::uint64_t inspected_ = 0;
};

// Laplace report-noisy-max over stored priorities. Every draw is O(D).
class NoisyMaxSelector final : public CoordinateSelector {
 public:
  NoisyMaxSelector(std::size_t size, double laplace_scale);

  void Add(std::size_t index, double priority) override;
  void Update(std::size_t index, double priority) override;
  std::size_t GetNext(const PriorityFn& true_priority,
                      RandomStream& rng) override;
  std::uint64_t pops() const override { return inspected_; }

  double laplace_scale() const { return scale_; }

 private:
  std::vector<double> priorities_;
  double scale_;
  std::uint64_t inspected_ = 0;
};

}  // namespace sparsefw

#endif  // SPARSEFW_SAMPLER_H_
