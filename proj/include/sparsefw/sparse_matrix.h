#ifndef SPARSEFW_SPARSE_MATRIX_H_
#define SPARSEFW_SPARSE_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace sparsefw {

// One stored nonzero. In a row view `index` is the column; in a column view
// it is the row.
struct Entry {
  std::size_t index;
  double value;
};

struct Triple {
  std::size_t row;
  std::size_t col;
  double value;
};

// Immutable sparse matrix holding both a row-major and a column-major copy of
// the same nonzero set, so that X[i,:] and X[:,j] are each traversed in time
// proportional to their nonzeros.
//
// Invariants: indices strictly increasing within every row and column list,
// all values finite and nonzero, and both views describe the same triples.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  // Builds both views from an unordered triple list. Exact zeros are
  // dropped. Throws std::invalid_argument on out-of-range indices, duplicate
  // (row, col) pairs or non-finite values.
  static SparseMatrix FromTriples(std::span<const Triple> triples,
                                  std::size_t n_rows, std::size_t n_cols);

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const { return row_entries_.size(); }

  std::span<const Entry> row(std::size_t i) const {
    return {row_entries_.data() + row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]};
  }
  std::span<const Entry> col(std::size_t j) const {
    return {col_entries_.data() + col_ptr_[j], col_ptr_[j + 1] - col_ptr_[j]};
  }

  // Mean nonzeros per row (S_c) and per column (S_r).
  double mean_row_nnz() const;
  double mean_col_nnz() const;

  // Largest |x_ij|; zero for an empty matrix.
  double max_abs_value() const;

  // Row-major triple list, mainly for serialization and tests.
  std::vector<Triple> ToTriples() const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<Entry> row_entries_;
  std::vector<std::size_t> col_ptr_{0};
  std::vector<Entry> col_entries_;
};

}  // namespace sparsefw

#endif  // SPARSEFW_SPARSE_MATRIX_H_
