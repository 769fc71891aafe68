#include "sparsefw/sparse_matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sparsefw {

SparseMatrix SparseMatrix::FromTriples(std::span<const Triple> triples,
                                       std::size_t n_rows, std::size_t n_cols) {
  std::vector<Triple> kept;
  kept.reserve(triples.size());
  for (const Triple& t : triples) {
    if (t.row >= n_rows || t.col >= n_cols) {
      throw std::invalid_argument(
          "triple (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
          ") out of range for " + std::to_string(n_rows) + "x" +
          std::to_string(n_cols) + " matrix");
    }
    if (!std::isfinite(t.value)) {
      throw std::invalid_argument("non-finite value at (" +
                                  std::to_string(t.row) + ", " +
                                  std::to_string(t.col) + ")");
    }
    if (t.value != 0.0) kept.push_back(t);
  }
  std::sort(kept.begin(), kept.end(), [](const Triple& a, const Triple& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t k = 1; k < kept.size(); ++k) {
    if (kept[k].row == kept[k - 1].row && kept[k].col == kept[k - 1].col) {
      throw std::invalid_argument("duplicate entry at (" +
                                  std::to_string(kept[k].row) + ", " +
                                  std::to_string(kept[k].col) + ")");
    }
  }

  SparseMatrix m;
  m.n_rows_ = n_rows;
  m.n_cols_ = n_cols;

  m.row_ptr_.assign(n_rows + 1, 0);
  m.col_ptr_.assign(n_cols + 1, 0);
  for (const Triple& t : kept) {
    ++m.row_ptr_[t.row + 1];
    ++m.col_ptr_[t.col + 1];
  }
  std::partial_sum(m.row_ptr_.begin(), m.row_ptr_.end(), m.row_ptr_.begin());
  std::partial_sum(m.col_ptr_.begin(), m.col_ptr_.end(), m.col_ptr_.begin());

  // Row-major order means a single pass also fills every column list in
  // increasing row order.
  m.row_entries_.resize(kept.size());
  m.col_entries_.resize(kept.size());
  std::vector<std::size_t> col_fill(m.col_ptr_.begin(), m.col_ptr_.end() - 1);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const Triple& t = kept[k];
    m.row_entries_[k] = {t.col, t.value};
    m.col_entries_[col_fill[t.col]++] = {t.row, t.value};
  }
  return m;
}

double SparseMatrix::mean_row_nnz() const {
  return n_rows_ == 0 ? 0.0 : static_cast<double>(nnz()) / n_rows_;
}

double SparseMatrix::mean_col_nnz() const {
  return n_cols_ == 0 ? 0.0 : static_cast<double>(nnz()) / n_cols_;
}

double SparseMatrix::max_abs_value() const {
  double best = 0.0;
  for (const Entry& e : row_entries_) best = std::max(best, std::abs(e.value));
  return best;
}

std::vector<Triple> SparseMatrix::ToTriples() const {
  std::vector<Triple> out;
  out.reserve(nnz());
  for (std::size_t i = 0; i < n_rows_; ++i) {
    for (const Entry& e : row(i)) out.push_back({i, e.index, e.value});
  }
  return out;
}

}  // namespace sparsefw
