#include "sparsefw/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <stdexcept>

#include "sparsefw/baseline.h"
#include "sparsefw/fast.h"

namespace sparsefw {
namespace {

void AppendDouble(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

double Median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of nothing");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                : 0.5 * (values[mid - 1] + values[mid]);
}

double BenchReport::SpeedupOverBaseline(const BenchTiming& t) const {
  return timings.at(0).median_seconds / t.median_seconds;
}

std::string BenchReport::ToCsv() const {
  std::string out =
      "method,median_seconds,speedup_vs_baseline,speedup_vs_noisymax\n";
  const double noisymax = timings.at(2).median_seconds;
  for (const BenchTiming& t : timings) {
    out += t.method;
    out += ',';
    AppendDouble(out, t.median_seconds);
    out += ',';
    AppendDouble(out, SpeedupOverBaseline(t));
    out += ',';
    AppendDouble(out, noisymax / t.median_seconds);
    out += '\n';
  }
  return out;
}

BenchReport RunBenchmark(const Dataset& data, const TrainConfig& config,
                         int repeats, std::uint64_t seed) {
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  TrainConfig base = config;
  base.private_mode = true;
  base.Privacy(data.rows());

  struct Method {
    const char* name;
    bool fast;
    SelectorKind selector;
  };
  const Method methods[] = {{"baseline", false, SelectorKind::kBls},
                            {"fast_bls", true, SelectorKind::kBls},
                            {"fast_noisymax", true, SelectorKind::kNoisyMax}};

  BenchReport report;
  for (const Method& m : methods) {
    BenchTiming timing;
    timing.method = m.name;
    TrainConfig run = base;
    run.selector = m.selector;
    for (int r = 0; r < repeats; ++r) {
      RandomStream rng(seed);
      const auto start = std::chrono::steady_clock::now();
      if (m.fast) {
        TrainFast(data, run, rng);
      } else {
        TrainBaseline(data, run, rng);
      }
      const std::chrono::duration<double> took =
          std::chrono::steady_clock::now() - start;
      timing.seconds.push_back(took.count());
    }
    timing.median_seconds = Median(timing.seconds);
    report.timings.push_back(std::move(timing));
  }
  return report;
}

}  // namespace sparsefw
