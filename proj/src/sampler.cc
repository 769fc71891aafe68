#include "sparsefw/sampler.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sparsefw/privacy.h"

namespace sparsefw {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::size_t CeilSqrt(std::size_t n) {
  auto g = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (g * g < n) ++g;
  while (g > 1 && (g - 1) * (g - 1) >= n) --g;
  return std::max<std::size_t>(g, 1);
}

}  // namespace

double LogSumExp(std::span<const double> v) {
  if (v.empty()) return kNegInf;
  const double top = *std::max_element(v.begin(), v.end());
  if (top == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double x : v) sum += std::exp(x - top);
  return top + std::log(sum);
}

std::size_t OracleSample(std::span<const double> log_weights,
                         RandomStream& rng) {
  if (log_weights.empty()) throw std::invalid_argument("empty weight vector");
  const double z = LogSumExp(log_weights);
  const double u = UniformOpen01(rng);
  double cumulative = 0.0;
  for (std::size_t j = 0; j < log_weights.size(); ++j) {
    cumulative += std::exp(log_weights[j] - z);
    if (u <= cumulative) return j;
  }
  // Rounding left the total just under u; the last item with weight wins.
  for (std::size_t j = log_weights.size(); j-- > 0;) {
    if (log_weights[j] != kNegInf) return j;
  }
  return log_weights.size() - 1;
}

std::size_t NoisyMaxGetNext(std::span<const double> priorities, double scale,
                            RandomStream& rng) {
  if (priorities.empty()) throw std::invalid_argument("empty priority vector");
  if (scale == 0.0) {
    return static_cast<std::size_t>(
        std::max_element(priorities.begin(), priorities.end()) -
        priorities.begin());
  }
  std::size_t best = 0;
  double best_value = kNegInf;
  for (std::size_t j = 0; j < priorities.size(); ++j) {
    const double noisy = priorities[j] + SampleLaplace(scale, rng);
    if (noisy > best_value) {
      best_value = noisy;
      best = j;
    }
  }
  return best;
}

BlsSampler::BlsSampler(std::size_t size)
    : v_(size, kNegInf),
      group_size_(CeilSqrt(size)),
      c_((size + group_size_ - 1) / group_size_, kNegInf),
      z_(kNegInf),
      present_(size, 0) {
  if (size == 0) throw std::invalid_argument("sampler needs at least 1 item");
}

void BlsSampler::Add(std::size_t index, double log_weight) {
  if (index >= v_.size()) {
    throw std::invalid_argument("sampler index " + std::to_string(index) +
                                " out of range");
  }
  if (!std::isfinite(log_weight)) {
    throw std::invalid_argument("sampler log-weight must be finite");
  }
  if (!present_[index]) {
    present_[index] = 1;
    ++added_;
  }
  v_[index] = log_weight;
  dirty_ = true;
}

void BlsSampler::RebuildGroup(std::size_t k) {
  const std::size_t begin = k * group_size_;
  const std::size_t end = std::min(begin + group_size_, v_.size());
  c_[k] = LogSumExp(std::span<const double>(v_).subspan(begin, end - begin));
}

void BlsSampler::RebuildTotal() { z_ = LogSumExp(c_); }

void BlsSampler::Rebuild() {
  for (std::size_t k = 0; k < c_.size(); ++k) RebuildGroup(k);
  RebuildTotal();
  updates_since_rebuild_ = 0;
  dirty_ = false;
}

void BlsSampler::Update(std::size_t index, double log_weight) {
  if (index >= v_.size() || !present_[index]) {
    throw std::invalid_argument("sampler index " + std::to_string(index) +
                                " was never added");
  }
  if (!std::isfinite(log_weight)) {
    throw std::invalid_argument("sampler log-weight must be finite");
  }
  const double old = v_[index];
  v_[index] = log_weight;
  if (dirty_) return;

  const std::size_t k = index / group_size_;
  const double arg_group =
      1.0 - std::exp(old - c_[k]) + std::exp(log_weight - c_[k]);
  if (std::isfinite(arg_group) && arg_group >= kCancellationFloor) {
    c_[k] += std::log(arg_group);
    const double arg_total =
        1.0 - std::exp(old - z_) + std::exp(log_weight - z_);
    if (std::isfinite(arg_total) && arg_total >= kCancellationFloor) {
      z_ += std::log(arg_total);
    } else {
      RebuildTotal();
    }
  } else {
    RebuildGroup(k);
    RebuildTotal();
  }
  if (++updates_since_rebuild_ >= v_.size()) Rebuild();
}

double BlsSampler::ItemWeight(std::size_t j) const {
  return std::exp(v_[j] - z_) + kWeightFloor;
}

double BlsSampler::GroupWeight(std::size_t k) const {
  const std::size_t begin = k * group_size_;
  const std::size_t end = std::min(begin + group_size_, v_.size());
  return std::exp(c_[k] - z_) + static_cast<double>(end - begin) * kWeightFloor;
}

std::size_t BlsSampler::Sample(RandomStream& rng) {
  if (added_ != v_.size()) {
    throw std::logic_error("sampler drawn before every item was added");
  }
  if (dirty_) Rebuild();
  const std::size_t n = v_.size();
  if (n < 4) {
    inspected_ += n;
    return OracleSample(v_, rng);
  }

  // The first item is always the initial reservoir content.
  std::size_t selected = 0;
  double weight = ItemWeight(0);
  ++inspected_;
  double log_threshold = std::log(UniformOpen01(rng)) / weight;
  double offset = weight;  // weight already consumed in the current group
  std::size_t pos = 1;

  while (pos < n) {
    double budget = std::log(UniformOpen01(rng)) / log_threshold;
    bool found = false;
    while (pos < n && !found) {
      const std::size_t k = pos / group_size_;
      const std::size_t group_begin = k * group_size_;
      const std::size_t group_end = std::min(group_begin + group_size_, n);
      if (pos == group_begin) offset = 0.0;
      ++inspected_;
      const double remaining = GroupWeight(k) - offset;
      if (remaining < budget) {
        // Big step: the rest of this group cannot hold the jump target.
        budget -= remaining;
        pos = group_end;
        continue;
      }
      // Little steps inside the group that crosses the budget.
      for (; pos < group_end; ++pos) {
        ++inspected_;
        const double w = ItemWeight(pos);
        if (w >= budget) {
          found = true;
          break;
        }
        budget -= w;
        offset += w;
      }
    }
    if (!found) break;

    selected = pos;
    weight = ItemWeight(pos);
    // New key drawn uniformly in (T_w^w, 1), kept in log form; 1 - t_w via
    // expm1 so thresholds close to 1 keep their precision.
    const double one_minus_tw = -std::expm1(weight * log_threshold);
    const double log_key =
        std::log1p(-one_minus_tw * (1.0 - UniformOpen01(rng)));
    if (!(log_key < 0.0)) break;  // threshold at 1: nothing can replace it
    log_threshold = log_key / weight;
    offset += weight;
    ++pos;
  }
  return selected;
}

std::size_t BlsSampler::GetNext(const PriorityFn& /*true_priority*/,
                                RandomStream& rng) {
  return Sample(rng);
}

NoisyMaxSelector::NoisyMaxSelector(std::size_t size, double laplace_scale)
    : priorities_(size, 0.0), scale_(laplace_scale) {
  if (size == 0) throw std::invalid_argument("selector needs at least 1 item");
  if (!(laplace_scale >= 0.0)) {
    throw std::invalid_argument("Laplace scale must be nonnegative");
  }
}

void NoisyMaxSelector::Add(std::size_t index, double priority) {
  Update(index, priority);
}

void NoisyMaxSelector::Update(std::size_t index, double priority) {
  if (index >= priorities_.size()) {
    throw std::invalid_argument("selector index " + std::to_string(index) +
                                " out of range");
  }
  priorities_[index] = priority;
}

std::size_t NoisyMaxSelector::GetNext(const PriorityFn& /*true_priority*/,
                                      RandomStream& rng) {
  inspected_ += priorities_.size();
  return NoisyMaxGetNext(priorities_, scale_, rng);
}

}  // namespace sparsefw
