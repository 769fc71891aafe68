#ifndef SPARSEFW_LAZY_HEAP_H_
#define SPARSEFW_LAZY_HEAP_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sparsefw/selector.h"

namespace sparsefw {

// Exact (nonprivate) coordinate selector over a pairing max-heap.
//
// Only priority increases are applied; decreases are ignored, so every stored
// key is an upper bound on the coordinate's true priority. GetNext pops until
// the best verified true priority beats the top stored bound, then re-inserts
// everything it popped under the true priorities. Ties go to the lower index.
//
// Costs: Add/increase O(1) amortized, pop O(log D) amortized.
class LazyMaxHeap final : public CoordinateSelector {
 public:
  explicit LazyMaxHeap(std::size_t capacity);

  // Throws std::invalid_argument if the index is out of range or present.
  void Add(std::size_t index, double priority) override;
  // Throws std::invalid_argument if the index is not in the heap.
  void Update(std::size_t index, double priority) override;
  // Throws std::logic_error on an empty heap. The stream is unused.
  std::size_t GetNext(const PriorityFn& true_priority,
                      RandomStream& rng) override;
  std::uint64_t pops() const override { return pops_; }

  std::size_t GetNext(const PriorityFn& true_priority);

  std::size_t size() const { return size_; }
  bool contains(std::size_t index) const {
    return index < in_heap_.size() && in_heap_[index];
  }
  double stored_priority(std::size_t index) const { return key_[index]; }
  std::size_t top() const { return root_; }

 private:
  static constexpr std::size_t kNil = static_cast<std::size_t>(-1);

  // True when (pa, a) should come out of the heap before (pb, b).
  static bool Beats(double pa, std::size_t a, double pb, std::size_t b) {
    return pa > pb || (pa == pb && a < b);
  }
  bool Beats(std::size_t a, std::size_t b) const {
    return Beats(key_[a], a, key_[b], b);
  }

  std::size_t Meld(std::size_t a, std::size_t b);
  void Insert(std::size_t index, double priority);
  std::size_t Pop();

  std::vector<double> key_;
  std::vector<std::size_t> child_;
  std::vector<std::size_t> sibling_;
  std::vector<std::size_t> prev_;  // previous sibling, or parent if leftmost
  std::vector<char> in_heap_;
  std::vector<std::size_t> scratch_;
  std::vector<std::size_t> popped_;
  std::size_t root_ = kNil;
  std::size_t size_ = 0;
  std::uint64_t pops_ = 0;
};

}  // namespace sparsefw

#endif  // SPARSEFW_LAZY_HEAP_H_
