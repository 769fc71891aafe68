#include "sparsefw/metrics.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sparsefw/loss.h"

namespace sparsefw {
namespace {

constexpr char kHeader[] = "iteration,g,flops,q_pops,elapsed_ms";

void AppendDouble(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

template <typename T>
T ParseField(std::string_view s, std::size_t line_no) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("metrics line " + std::to_string(line_no) +
                             ": bad field '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

void WriteMetricsCsv(std::span<const MetricsRow> rows,
                     const std::filesystem::path& path) {
  std::string out = kHeader;
  out += '\n';
  for (const MetricsRow& r : rows) {
    out += std::to_string(r.iteration);
    out += ',';
    AppendDouble(out, r.g);
    out += ',';
    out += std::to_string(r.flops);
    out += ',';
    out += std::to_string(r.q_pops);
    out += ',';
    AppendDouble(out, r.elapsed_ms);
    out += '\n';
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << out;
  if (!file) throw std::runtime_error("write failed: " + path.string());
}

std::vector<MetricsRow> ReadMetricsCsv(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(file, line) || line != kHeader) {
    throw std::runtime_error("missing metrics header in " + path.string());
  }
  std::vector<MetricsRow> rows;
  std::size_t line_no = 1;
  while (std::getline(file, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string_view rest(line);
    std::string_view fields[5];
    for (int f = 0; f < 5; ++f) {
      const auto comma = rest.find(',');
      if ((comma == std::string_view::npos) != (f == 4)) {
        throw std::runtime_error("metrics line " + std::to_string(line_no) +
                                 ": expected 5 fields");
      }
      fields[f] = rest.substr(0, comma);
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
    MetricsRow r;
    r.iteration = ParseField<std::uint64_t>(fields[0], line_no);
    r.g = ParseField<double>(fields[1], line_no);
    r.flops = ParseField<std::uint64_t>(fields[2], line_no);
    r.q_pops = ParseField<std::uint64_t>(fields[3], line_no);
    r.elapsed_ms = ParseField<double>(fields[4], line_no);
    rows.push_back(r);
  }
  return rows;
}

std::optional<double> RankAuc(std::span<const double> scores,
                              std::span<const int> labels) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  double positive_rank_sum = 0.0;
  std::size_t positives = 0;
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start;
    while (end < n && scores[order[end]] == scores[order[start]]) ++end;
    // Ranks are 1-based; a tie block shares the mean of its ranks.
    const double midrank = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t k = start; k < end; ++k) {
      if (labels[order[k]] == 1) {
        positive_rank_sum += midrank;
        ++positives;
      }
    }
    start = end;
  }
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0) return std::nullopt;
  const double p = static_cast<double>(positives);
  return (positive_rank_sum - p * (p + 1.0) / 2.0) /
         (p * static_cast<double>(negatives));
}

Evaluation Evaluate(const Dataset& data, std::span<const double> w) {
  if (w.size() != data.cols()) {
    throw std::invalid_argument("weight vector width does not match data");
  }
  std::vector<double> scores(data.rows(), 0.0);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    double s = 0.0;
    for (const Entry& e : data.x.row(i)) s += e.value * w[e.index];
    scores[i] = s;
    const int predicted = Sigmoid(s) >= 0.5 ? 1 : 0;
    if (predicted == data.y[i]) ++correct;
  }
  Evaluation out;
  out.accuracy = data.rows() == 0 ? 0.0
                                  : static_cast<double>(correct) /
                                        static_cast<double>(data.rows());
  out.auc = RankAuc(scores, data.y);
  const auto zeros = std::count(w.begin(), w.end(), 0.0);
  out.sparsity =
      w.empty() ? 1.0
                : static_cast<double>(zeros) / static_cast<double>(w.size());
  return out;
}

}  // namespace sparsefw
