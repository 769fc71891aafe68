#ifndef SPARSEFW_MODEL_IO_H_
#define SPARSEFW_MODEL_IO_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace sparsefw {

struct SavedModel {
  std::vector<double> weights;
  double lambda = 0.0;
  std::string algo;
};

// Text model file:
//   # n_features=<D> lambda=<lambda> algo=<name>
//   <idx>:<val> <idx>:<val> ...
// with 1-based indices and only nonzero coefficients listed.
std::string FormatModel(const SavedModel& model);
SavedModel ParseModel(const std::string& text);

void WriteModel(const SavedModel& model, const std::filesystem::path& path);
SavedModel ReadModel(const std::filesystem::path& path);

}  // namespace sparsefw

#endif  // SPARSEFW_MODEL_IO_H_
