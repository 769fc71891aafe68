#include "sparsefw/dataset.h"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string_view>
#include <system_error>

#include "sparsefw/random.h"

namespace sparsefw {
namespace {

std::string ReadGzip(const std::filesystem::path& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::string out;
  char buf[1 << 16];
  int got = 0;
  while ((got = gzread(file, buf, sizeof(buf))) > 0) out.append(buf, got);
  const bool failed = got < 0;
  gzclose(file);
  if (failed) throw std::runtime_error("gzip read failed: " + path.string());
  return out;
}

std::string ReadPlain(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits on blanks and hands each token to `fn`.
template <typename Fn>
void ForEachToken(std::string_view line, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && IsSpace(line[pos])) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !IsSpace(line[end])) ++end;
    if (end > pos) fn(line.substr(pos, end - pos));
    pos = end;
  }
}

double ParseDouble(std::string_view s, std::size_t line_no, const char* what) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" +
                                  std::string(s) + "'");
  }
  return v;
}

std::size_t ParseIndex(std::string_view s, std::size_t line_no) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw ParseError(line_no, "malformed feature index '" + std::string(s) +
                                  "' (indices are 1-based)");
  }
  return v;
}

// Picks `k` distinct values from [0, n) with Floyd's algorithm; `stamp` and
// `epoch` make membership tests O(1) without clearing between rows.
void SampleDistinct(std::size_t k, std::size_t n, RandomStream& rng,
                    std::vector<std::uint64_t>& stamp, std::uint64_t epoch,
                    std::vector<std::size_t>& out) {
  out.clear();
  for (std::size_t r = n - k; r < n; ++r) {
    std::uniform_int_distribution<std::size_t> pick(0, r);
    std::size_t c = pick(rng);
    if (stamp[c] == epoch) c = r;
    stamp[c] = epoch;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

void Dataset::Validate() const {
  if (y.size() != x.rows()) {
    throw std::invalid_argument("label count " + std::to_string(y.size()) +
                                " does not match row count " +
                                std::to_string(x.rows()));
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0 && y[i] != 1) {
      throw std::invalid_argument("label at row " + std::to_string(i) +
                                  " is not 0 or 1");
    }
  }
}

Dataset ParseSvmlight(const std::string& text,
                      std::optional<std::size_t> n_features) {
  std::vector<Triple> triples;
  std::vector<int> labels;
  std::size_t max_index = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + start, end - start);
    start = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    bool have_label = false;
    std::size_t prev_index = 0;
    const std::size_t row = labels.size();
    ForEachToken(line, [&](std::string_view tok) {
      if (!have_label) {
        const double label = ParseDouble(tok, line_no, "label");
        if (label == 1.0) {
          labels.push_back(1);
        } else if (label == 0.0 || label == -1.0) {
          labels.push_back(0);
        } else {
          throw ParseError(line_no, "label '" + std::string(tok) +
                                        "' is not one of -1, 0, +1");
        }
        have_label = true;
        return;
      }
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no,
                         "expected idx:val, got '" + std::string(tok) + "'");
      }
      const std::size_t index = ParseIndex(tok.substr(0, colon), line_no);
      const double value =
          ParseDouble(tok.substr(colon + 1), line_no, "feature value");
      if (index == prev_index) {
        throw ParseError(line_no,
                         "duplicate feature index " + std::to_string(index));
      }
      if (index < prev_index) {
        throw ParseError(line_no, "feature index " + std::to_string(index) +
                                      " is not increasing");
      }
      if (!std::isfinite(value)) {
        throw ParseError(line_no, "non-finite feature value");
      }
      prev_index = index;
      max_index = std::max(max_index, index);
      if (value != 0.0) triples.push_back({row, index - 1, value});
    });
  }

  std::size_t cols = max_index;
  if (n_features) {
    if (*n_features < max_index) {
      throw std::invalid_argument(
          "feature count override " + std::to_string(*n_features) +
          " is smaller than the largest index " + std::to_string(max_index));
    }
    cols = *n_features;
  }
  Dataset data;
  data.x = SparseMatrix::FromTriples(triples, labels.size(), cols);
  data.y = std::move(labels);
  return data;
}

Dataset LoadSvmlight(const std::filesystem::path& path,
                     std::optional<std::size_t> n_features) {
  const bool gz = path.extension() == ".gz";
  return ParseSvmlight(gz ? ReadGzip(path) : ReadPlain(path), n_features);
}

std::string FormatSvmlight(const Dataset& data) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < data.rows(); ++i) {
    out += data.y[i] == 1 ? "1" : "0";
    for (const Entry& e : data.x.row(i)) {
      out += ' ';
      out += std::to_string(e.index + 1);
      out += ':';
      const auto res = std::to_chars(buf, buf + sizeof(buf), e.value);
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

void WriteSvmlight(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << FormatSvmlight(data);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Dataset GenerateSynthetic(const SyntheticSpec& spec) {
  if (!(spec.density > 0.0 && spec.density <= 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  if (spec.informative > spec.cols) {
    throw std::invalid_argument("informative feature count exceeds columns");
  }
  RandomStream rng(spec.seed);
  std::vector<std::uint64_t> stamp(spec.cols, 0);
  std::uint64_t epoch = 0;
  std::vector<std::size_t> picked;

  // Hidden model: informative features get weights of magnitude in [1, 3].
  std::vector<double> hidden(spec.cols, 0.0);
  if (spec.informative > 0) {
    SampleDistinct(spec.informative, spec.cols, rng, stamp, ++epoch, picked);
    std::uniform_real_distribution<double> mag(1.0, 3.0);
    for (std::size_t j : picked) {
      const double m = mag(rng);
      hidden[j] = (rng() & 1) ? m : -m;
    }
  }

  std::binomial_distribution<std::size_t> count(spec.cols, spec.density);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::normal_distribution<double> noise(0.0, 0.1);

  std::vector<Triple> triples;
  triples.reserve(static_cast<std::size_t>(
      1.1 * spec.density * static_cast<double>(spec.rows) * spec.cols));
  std::vector<int> labels(spec.rows);
  for (std::size_t i = 0; i < spec.rows; ++i) {
    const std::size_t k = count(rng);
    SampleDistinct(k, spec.cols, rng, stamp, ++epoch, picked);
    double score = 0.0;
    for (std::size_t j : picked) {
      double v = 0.0;
      while (v == 0.0) v = value(rng);
      triples.push_back({i, j, v});
      score += hidden[j] * v;
    }
    labels[i] = score + noise(rng) > 0.0 ? 1 : 0;
  }
  Dataset data;
  data.x = SparseMatrix::FromTriples(triples, spec.rows, spec.cols);
  data.y = std::move(labels);
  return data;
}

}  // namespace sparsefw
