#ifndef SPARSEFW_DATASET_H_
#define SPARSEFW_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsefw/sparse_matrix.h"

namespace sparsefw {

// Design matrix plus binary labels. Every label is exactly 0 or 1 and there
// is one label per row of x.
struct Dataset {
  SparseMatrix x;
  std::vector<int> y;

  std::size_t rows() const { return x.rows(); }
  std::size_t cols() const { return x.cols(); }

  // Throws std::invalid_argument if the label vector is inconsistent.
  void Validate() const;
};

// Raised by the svmlight reader; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses svmlight/libsvm text: `<label> <idx>:<val> ...`, 1-based strictly
// increasing indices, optional trailing `# comment`. Labels +1/-1 map to
// 1/0 and 0/1 pass through. Explicit zero values are dropped. The column
// count is the largest index seen, or `n_features` when given (which must be
// at least that large). Files ending in `.gz` are decompressed.
Dataset LoadSvmlight(const std::filesystem::path& path,
                     std::optional<std::size_t> n_features = std::nullopt);

// Same parser over an in-memory buffer.
Dataset ParseSvmlight(const std::string& text,
                      std::optional<std::size_t> n_features = std::nullopt);

// Writes labels as 1/0 (the loader reads them back unchanged) and values with
// round-trip precision.
void WriteSvmlight(const Dataset& data, const std::filesystem::path& path);
std::string FormatSvmlight(const Dataset& data);

struct SyntheticSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double density = 0.0;
  std::size_t informative = 0;
  std::uint64_t seed = 0;
};

// Deterministic random sparse classification problem. Each row draws
// Binomial(cols, density) distinct features with values uniform in [-1, 1];
// labels threshold a hidden `informative`-sparse linear model plus a small
// Gaussian perturbation.
Dataset GenerateSynthetic(const SyntheticSpec& spec);

}  // namespace sparsefw

#endif  // SPARSEFW_DATASET_H_
