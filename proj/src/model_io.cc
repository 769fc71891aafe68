#include "sparsefw/model_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sparsefw {
namespace {

std::string ToChars(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

template <typename T>
T Parse(std::string_view s, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error(std::string("model file: bad ") + what + " '" +
                             std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string FormatModel(const SavedModel& model) {
  std::string out = "# n_features=" + std::to_string(model.weights.size()) +
                    " lambda=" + ToChars(model.lambda) + " algo=" + model.algo +
                    "\n";
  bool first = true;
  for (std::size_t k = 0; k < model.weights.size(); ++k) {
    if (model.weights[k] == 0.0) continue;
    if (!first) out += ' ';
    first = false;
    out += std::to_string(k + 1) + ":" + ToChars(model.weights[k]);
  }
  out += '\n';
  return out;
}

SavedModel ParseModel(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind("# ", 0) != 0) {
    throw std::runtime_error("model file: missing header line");
  }
  SavedModel model;
  std::size_t n_features = 0;
  bool have_features = false;
  std::istringstream fields(header.substr(2));
  std::string field;
  while (fields >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("model file: bad header field '" + field + "'");
    }
    const std::string key = field.substr(0, eq);
    const std::string_view value(field.c_str() + eq + 1);
    if (key == "n_features") {
      n_features = Parse<std::size_t>(value, "n_features");
      have_features = true;
    } else if (key == "lambda") {
      model.lambda = Parse<double>(value, "lambda");
    } else if (key == "algo") {
      model.algo = std::string(value);
    }
  }
  if (!have_features) throw std::runtime_error("model file: no n_features");
  model.weights.assign(n_features, 0.0);
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("model file: expected idx:val, got '" + token +
                               "'");
    }
    const auto index =
        Parse<std::size_t>(std::string_view(token).substr(0, colon), "index");
    if (index == 0 || index > n_features) {
      throw std::runtime_error("model file: index out of range");
    }
    model.weights[index - 1] =
        Parse<double>(std::string_view(token).substr(colon + 1), "value");
  }
  return model;
}

void WriteModel(const SavedModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << FormatModel(model);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

SavedModel ReadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseModel(ss.str());
}

}  // namespace sparsefw
