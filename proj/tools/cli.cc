#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "sparsefw/baseline.h"
#include "sparsefw/bench.h"
#include "sparsefw/dataset.h"
#include "sparsefw/fast.h"
#include "sparsefw/metrics.h"
#include "sparsefw/model_io.h"
#include "sparsefw/privacy.h"

namespace sparsefw::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrivacyFlags {
  bool private_mode = false;
  std::optional<double> epsilon;
  std::optional<double> delta;
  double lambda = 50.0;
  std::size_t iters = 4000;
  double lipschitz = 1.0;
  std::uint64_t seed = 0;
  std::string refresh = "sparse";
};

struct TrainFlags {
  PrivacyFlags p;
  std::string data;
  std::string test_data;
  std::optional<std::size_t> n_features;
  std::string algo = "fast";
  std::optional<std::string> selector;
  std::string metrics_out;
  std::string model_out;
  bool omit_timing = false;
};

struct EvalFlags {
  std::string model;
  std::string data;
};

struct SynthFlags {
  std::size_t rows = 1000;
  std::size_t cols = 10000;
  double density = 0.01;
  std::size_t informative = 20;
  std::uint64_t seed = 0;
  std::string out;
};

struct BenchFlags {
  PrivacyFlags p;
  std::string data;
  SynthFlags synth;
  int repeats = 3;
  std::string out;
};

void AddPrivacyOptions(CLI::App* cmd, PrivacyFlags& f) {
  cmd->add_flag("--private,!--no-private", f.private_mode,
                "Train under (epsilon, delta)-differential privacy");
  cmd->add_option("--epsilon", f.epsilon, "Privacy budget epsilon");
  cmd->add_option("--delta", f.delta, "Privacy parameter delta (no default)");
  cmd->add_option("--lambda", f.lambda, "L1-ball radius")
      ->capture_default_str();
  cmd->add_option("--iters", f.iters, "Iterations T")->capture_default_str();
  cmd->add_option("--lipschitz", f.lipschitz,
                  "L1-Lipschitz constant of the loss")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed of the privacy noise stream")
      ->capture_default_str();
  cmd->add_option("--refresh", f.refresh,
                  "Fast trainer row refresh: exact or sparse")
      ->capture_default_str();
}

TrainConfig ConfigFrom(const PrivacyFlags& f) {
  TrainConfig c;
  c.lambda = f.lambda;
  c.iterations = f.iters;
  c.lipschitz = f.lipschitz;
  c.private_mode = f.private_mode;
  if (f.refresh == "exact") {
    c.refresh = RowRefresh::kExact;
  } else if (f.refresh == "sparse") {
    c.refresh = RowRefresh::kSparse;
  } else {
    throw UsageError("--refresh must be exact or sparse");
  }
  if (f.private_mode) {
    if (!f.epsilon) throw UsageError("--private requires --epsilon");
    if (!f.delta) throw UsageError("--private requires --delta");
    c.epsilon = *f.epsilon;
    c.delta = *f.delta;
  }
  try {
    c.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

SelectorKind ParseSelector(const std::string& name) {
  if (name == "lazyheap") return SelectorKind::kLazyHeap;
  if (name == "bls") return SelectorKind::kBls;
  if (name == "noisymax") return SelectorKind::kNoisyMax;
  throw UsageError("unknown selector '" + name + "'");
}

void WarnOnLipschitz(const Dataset& data, double lipschitz, std::ostream& err) {
  const double max_abs = data.x.max_abs_value();
  if (max_abs > 1.0 && lipschitz == 1.0) {
    err << "warning: max |x_ij| = " << max_abs
        << " exceeds 1, so L = 1 may understate the loss's Lipschitz "
           "constant; pass --lipschitz\n";
  }
}

void LogPrivacy(const TrainConfig& config, std::size_t rows,
                std::ostream& out) {
  const PrivacyParams p = config.Privacy(rows);
  out << "privacy: epsilon=" << p.epsilon << " delta=" << p.delta
      << " per_step_epsilon=" << PerStepEpsilon(p)
      << " laplace_scale=" << LaplaceScale(p)
      << " exp_mech_scale=" << ExpMechScale(p) << "\n";
}

void PrintEvaluation(const Evaluation& e, std::ostream& out) {
  out << std::fixed << std::setprecision(2) << "accuracy=" << 100.0 * e.accuracy
      << "%";
  if (e.auc) {
    out << " auc=" << 100.0 * *e.auc << "%";
  } else {
    out << " auc=undefined (single-class labels)";
  }
  out << " sparsity=" << 100.0 * e.sparsity << "%\n"
      << std::defaultfloat << std::setprecision(6);
}

int RunTrain(const TrainFlags& f, std::ostream& out, std::ostream& err) {
  TrainConfig config = ConfigFrom(f.p);
  if (f.algo != "baseline" && f.algo != "fast") {
    throw UsageError("--algo must be baseline or fast");
  }
  if (f.selector) {
    config.selector = ParseSelector(*f.selector);
    if (config.private_mode && config.selector == SelectorKind::kLazyHeap) {
      throw UsageError(
          "--selector lazyheap is exact and cannot be combined with --private");
    }
    if (!config.private_mode && config.selector != SelectorKind::kLazyHeap) {
      throw UsageError("--selector " + *f.selector + " requires --private");
    }
  } else {
    config.selector =
        config.private_mode ? SelectorKind::kBls : SelectorKind::kLazyHeap;
  }

  const Dataset data = LoadSvmlight(f.data, f.n_features);
  WarnOnLipschitz(data, config.lipschitz, err);
  if (config.private_mode) LogPrivacy(config, data.rows(), out);

  std::vector<MetricsRow> rows;
  const MetricsSink sink = [&rows, &f](const MetricsRow& r) {
    rows.push_back(r);
    if (f.omit_timing) rows.back().elapsed_ms = 0.0;
  };
  RandomStream rng(f.p.seed);
  const auto start = std::chrono::steady_clock::now();
  const TrainResult result = f.algo == "baseline"
                                 ? TrainBaseline(data, config, rng, sink)
                                 : TrainFast(data, config, rng, sink);
  const std::chrono::duration<double> took =
      std::chrono::steady_clock::now() - start;

  if (!f.metrics_out.empty()) WriteMetricsCsv(rows, f.metrics_out);
  if (!f.model_out.empty()) {
    WriteModel({result.weights, config.lambda, f.algo}, f.model_out);
  }
  const auto support =
      std::count_if(result.weights.begin(), result.weights.end(),
                    [](double v) { return v != 0.0; });
  out << "final_g=" << (result.gaps.empty() ? 0.0 : result.gaps.back())
      << " nonzeros=" << support << " elapsed_s=" << took.count() << "\n";

  if (!f.test_data.empty()) {
    const Dataset test = LoadSvmlight(f.test_data, data.cols());
    PrintEvaluation(Evaluate(test, result.weights), out);
  }
  return kExitOk;
}

int RunEvaluate(const EvalFlags& f, std::ostream& out) {
  const SavedModel model = ReadModel(f.model);
  const Dataset data = LoadSvmlight(f.data, model.weights.size());
  PrintEvaluation(Evaluate(data, model.weights), out);
  return kExitOk;
}

SyntheticSpec SpecFrom(const SynthFlags& f) {
  if (!(f.density > 0.0 && f.density <= 1.0)) {
    throw UsageError("--density must lie in (0, 1]");
  }
  if (f.informative > f.cols) {
    throw UsageError("--informative cannot exceed --cols");
  }
  return {f.rows, f.cols, f.density, f.informative, f.seed};
}

int RunSynth(const SynthFlags& f, std::ostream& out) {
  const Dataset data = GenerateSynthetic(SpecFrom(f));
  WriteSvmlight(data, f.out);
  out << "wrote " << data.rows() << " rows, " << data.cols()
      << " features, nnz=" << data.x.nnz() << " to " << f.out << "\n";
  return kExitOk;
}

int RunBench(BenchFlags f, std::ostream& out, std::ostream& err) {
  f.p.private_mode = true;
  const TrainConfig config = ConfigFrom(f.p);
  if (f.repeats < 1) throw UsageError("--repeats must be at least 1");
  const Dataset data = f.data.empty() ? GenerateSynthetic(SpecFrom(f.synth))
                                      : LoadSvmlight(f.data);
  WarnOnLipschitz(data, config.lipschitz, err);
  const BenchReport report = RunBenchmark(data, config, f.repeats, f.p.seed);
  const std::string csv = report.ToCsv();
  if (f.out.empty()) {
    out << csv;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    file << csv;
    if (!file) throw std::runtime_error("cannot write " + f.out);
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Sparse-aware (differentially private) Frank-Wolfe LASSO "
      "logistic regression"};
  app.name(args.empty() ? "sparsefw" : args[0]);
  app.require_subcommand(1);

  TrainFlags train;
  auto* train_cmd = app.add_subcommand("train", "Train a model");
  train_cmd->add_option("--data", train.data, "Training data (svmlight)")
      ->required();
  train_cmd->add_option("--test-data", train.test_data,
                        "Held-out data to evaluate on");
  train_cmd->add_option("--n-features", train.n_features,
                        "Feature count override for index alignment");
  train_cmd->add_option("--algo", train.algo, "baseline or fast")
      ->capture_default_str();
  train_cmd->add_option("--selector", train.selector,
                        "lazyheap, bls or noisymax");
  train_cmd->add_option("--metrics-out", train.metrics_out,
                        "Per-iteration metrics CSV");
  train_cmd->add_option("--model-out", train.model_out, "Model output file");
  train_cmd->add_flag("--omit-timing", train.omit_timing,
                      "Write elapsed_ms as 0 for byte-reproducible metrics");
  AddPrivacyOptions(train_cmd, train.p);

  EvalFlags eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate a saved model");
  eval_cmd->add_option("--model", eval.model, "Model file")->required();
  eval_cmd->add_option("--data", eval.data, "Data (svmlight)")->required();

  SynthFlags synth;
  auto* synth_cmd =
      app.add_subcommand("synth", "Write a synthetic svmlight dataset");
  synth_cmd->add_option("--rows", synth.rows)->capture_default_str();
  synth_cmd->add_option("--cols", synth.cols)->capture_default_str();
  synth_cmd->add_option("--density", synth.density)->capture_default_str();
  synth_cmd->add_option("--informative", synth.informative)
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
  synth_cmd->add_option("--out", synth.out, "Output path")->required();

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time private baseline vs fast+BLS vs fast+noisy-max");
  bench_cmd->add_option("--data", bench.data,
                        "Data (svmlight); synthetic when omitted");
  bench_cmd->add_option("--rows", bench.synth.rows)->capture_default_str();
  bench_cmd->add_option("--cols", bench.synth.cols)->capture_default_str();
  bench_cmd->add_option("--density", bench.synth.density)
      ->capture_default_str();
  bench_cmd->add_option("--informative", bench.synth.informative)
      ->capture_default_str();
  bench_cmd->add_option("--synth-seed", bench.synth.seed)
      ->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats)->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV output (default stdout)");
  AddPrivacyOptions(bench_cmd, bench.p);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("sparsefw");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train_cmd) return RunTrain(train, out, err);
    if (*eval_cmd) return RunEvaluate(eval, out);
    if (*synth_cmd) return RunSynth(synth, out);
    if (*bench_cmd) return RunBench(bench, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sparsefw::cli
