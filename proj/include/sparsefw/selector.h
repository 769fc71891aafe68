#ifndef SPARSEFW_SELECTOR_H_
#define SPARSEFW_SELECTOR_H_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "sparsefw/random.h"

namespace sparsefw {

// Reads the current true priority of a coordinate. Selectors that cache
// stale bounds use it to verify candidates.
using PriorityFn = std::function<double(std::size_t)>;

// Queue contract shared by the fast trainer's coordinate selection backends.
// Priorities are nonnegative: |alpha_j| (nonprivate) or |alpha_j| * scale.
class CoordinateSelector {
 public:
  virtual ~CoordinateSelector() = default;

  virtual void Add(std::size_t index, double priority) = 0;
  virtual void Update(std::size_t index, double priority) = 0;
  virtual std::size_t GetNext(const PriorityFn& true_priority,
                              RandomStream& rng) = 0;

  // Cumulative selector work: heap pops or sampler items inspected.
  virtual std::uint64_t pops() const = 0;
};

enum class SelectorKind { kLazyHeap, kBls, kNoisyMax };

}  // namespace sparsefw

#endif  // SPARSEFW_SELECTOR_H_
