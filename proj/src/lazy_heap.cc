#include "sparsefw/lazy_heap.h"

#include <stdexcept>
#include <string>

namespace sparsefw {

LazyMaxHeap::LazyMaxHeap(std::size_t capacity)
    : key_(capacity, 0.0),
      child_(capacity, kNil),
      sibling_(capacity, kNil),
      prev_(capacity, kNil),
      in_heap_(capacity, 0) {}

std::size_t LazyMaxHeap::Meld(std::size_t a, std::size_t b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  if (Beats(b, a)) std::swap(a, b);
  // b becomes the leftmost child of a.
  sibling_[b] = child_[a];
  if (child_[a] != kNil) prev_[child_[a]] = b;
  prev_[b] = a;
  child_[a] = b;
  return a;
}

void LazyMaxHeap::Insert(std::size_t index, double priority) {
  key_[index] = priority;
  child_[index] = sibling_[index] = prev_[index] = kNil;
  in_heap_[index] = 1;
  ++size_;
  root_ = Meld(root_, index);
}

void LazyMaxHeap::Add(std::size_t index, double priority) {
  if (index >= key_.size()) {
    throw std::invalid_argument("heap index " + std::to_string(index) +
                                " out of range");
  }
  if (in_heap_[index]) {
    throw std::invalid_argument("heap index " + std::to_string(index) +
                                " already present");
  }
  Insert(index, priority);
}

void LazyMaxHeap::Update(std::size_t index, double priority) {
  if (!contains(index)) {
    throw std::invalid_argument("heap index " + std::to_string(index) +
                                " not in heap");
  }
  if (!(priority > key_[index])) return;
  key_[index] = priority;
  if (index == root_) return;
  // Cut the subtree rooted at index and meld it back at the root.
  const std::size_t p = prev_[index];
  if (child_[p] == index) {
    child_[p] = sibling_[index];
  } else {
    sibling_[p] = sibling_[index];
  }
  if (sibling_[index] != kNil) prev_[sibling_[index]] = p;
  sibling_[index] = prev_[index] = kNil;
  root_ = Meld(root_, index);
}

std::size_t LazyMaxHeap::Pop() {
  const std::size_t top = root_;
  // Standard two-pass pairing: meld neighbours left to right, then fold the
  // pairs right to left.
  scratch_.clear();
  std::size_t c = child_[top];
  while (c != kNil) {
    const std::size_t a = c;
    const std::size_t b = sibling_[a];
    c = b == kNil ? kNil : sibling_[b];
    sibling_[a] = prev_[a] = kNil;
    if (b != kNil) sibling_[b] = prev_[b] = kNil;
    scratch_.push_back(Meld(a, b));
  }
  std::size_t merged = kNil;
  for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) {
    merged = Meld(merged, *it);
  }
  root_ = merged;
  child_[top] = kNil;
  in_heap_[top] = 0;
  --size_;
  return top;
}

std::size_t LazyMaxHeap::GetNext(const PriorityFn& true_priority) {
  if (size_ == 0) throw std::logic_error("GetNext on an empty heap");
  popped_.clear();
  std::size_t best = kNil;
  double best_value = 0.0;
  do {
    const std::size_t c = Pop();
    ++pops_;
    popped_.push_back(c);
    const double value = true_priority(c);
    if (best == kNil || Beats(value, c, best_value, best)) {
      best = c;
      best_value = value;
    }
  } while (root_ != kNil && !Beats(best_value, best, key_[root_], root_));
  for (std::size_t c : popped_) Insert(c, true_priority(c));
  return best;
}

std::size_t LazyMaxHeap::GetNext(const PriorityFn& true_priority,
                                 RandomStream& /*rng*/) {
  return GetNext(true_priority);
}

}  // namespace sparsefw
