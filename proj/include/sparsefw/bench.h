#ifndef SPARSEFW_BENCH_H_
#define SPARSEFW_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sparsefw/dataset.h"
#include "sparsefw/train_config.h"

namespace sparsefw {

struct BenchTiming {
  std::string method;  // baseline, fast_bls, fast_noisymax
  std::vector<double> seconds;
  double median_seconds = 0.0;
};

struct BenchReport {
  std::vector<BenchTiming> timings;  // always baseline, fast_bls, fast_noisymax

  double SpeedupOverBaseline(const BenchTiming& t) const;
  // Three rows with columns method,median_seconds,speedup_vs_baseline,
  // speedup_vs_noisymax.
  std::string ToCsv() const;
};

// Times private baseline, fast+BLS and fast+noisy-max training on the same
// data and privacy settings `repeats` times each and keeps the median. Each
// run reseeds its noise stream from `seed`.
BenchReport RunBenchmark(const Dataset& data, const TrainConfig& config,
                         int repeats, std::uint64_t seed);

double Median(std::vector<double> values);

}  // namespace sparsefw

#endif  // SPARSEFW_BENCH_H_
