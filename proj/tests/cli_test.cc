#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "sparsefw/dataset.h"
#include "sparsefw/metrics.h"
#include "sparsefw/model_io.h"
#include "test_util.h"

namespace sparsefw {
namespace {

struct RunOutput {
  int code;
  std::string out;
  std::string err;
};

RunOutput Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sparsefw");
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::set<std::size_t> Support(const SavedModel& m) {
  std::set<std::size_t> s;
  for (std::size_t k = 0; k < m.weights.size(); ++k) {
    if (m.weights[k] != 0.0) s.insert(k);
  }
  return s;
}

struct Workspace {
  std::filesystem::path dir = testing::ScratchDir("cli");
  std::string data = (dir / "train.svm").string();

  Workspace() {
    const auto r =
        Cli({"synth", "--rows", "300", "--cols", "1000", "--density", "0.02",
             "--informative", "20", "--seed", "3", "--out", data});
    REQUIRE(r.code == 0);
  }
  ~Workspace() { std::filesystem::remove_all(dir); }
  std::string Path(const std::string& name) const {
    return (dir / name).string();
  }
};

TEST_CASE("synth writes reproducible loadable files") {
  Workspace ws;
  const std::string again = ws.Path("again.svm");
  REQUIRE(Cli({"synth", "--rows", "300", "--cols", "1000", "--density", "0.02",
               "--informative", "20", "--seed", "3", "--out", again})
              .code == 0);
  CHECK(Slurp(ws.data) == Slurp(again));
  const Dataset d = LoadSvmlight(ws.data, 1000);
  CHECK(d.rows() == 300);
  CHECK(FormatSvmlight(d) == Slurp(ws.data));
  CHECK(Cli({"synth", "--rows", "3", "--cols", "4", "--density", "1.5", "--out",
             ws.Path("bad.svm")})
            .code == 2);
}

TEST_CASE("usage errors exit with 2") {
  Workspace ws;
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"frobnicate"}).code == 2);
  CHECK(Cli({"train"}).code == 2);
  CHECK(Cli({"train", "--data", ws.data, "--private", "--epsilon", "1",
             "--delta", "1e-6", "--selector", "lazyheap"})
            .code == 2);
  CHECK(Cli({"train", "--data", ws.data, "--selector", "bls"}).code == 2);
  CHECK(Cli({"train", "--data", ws.data, "--private", "--epsilon", "1"}).code ==
        2);
  CHECK(Cli({"train", "--data", ws.data, "--algo", "slow"}).code == 2);
  CHECK(Cli({"train", "--data", ws.data, "--refresh", "sometimes"}).code == 2);
  CHECK(Cli({"train", "--data", ws.Path("missing.svm")}).code == 1);
}

TEST_CASE("train writes metrics and a model") {
  Workspace ws;
  const auto r = Cli({"train", "--data", ws.data, "--algo", "fast",
                      "--selector", "lazyheap", "--no-private", "--iters",
                      "100", "--metrics-out", ws.Path("m.csv"), "--model-out",
                      ws.Path("model.txt"), "--test-data", ws.data});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("final_g=") != std::string::npos);
  CHECK(r.out.find("nonzeros=") != std::string::npos);
  CHECK(r.out.find("accuracy=") != std::string::npos);
  const auto rows = ReadMetricsCsv(ws.Path("m.csv"));
  REQUIRE(rows.size() == 99);
  CHECK(rows.front().iteration == 1);
  CHECK(rows.back().iteration == 99);
  const SavedModel m = ReadModel(ws.Path("model.txt"));
  CHECK(m.weights.size() == 1000);
  CHECK(m.algo == "fast");
  CHECK(m.lambda == 50.0);

  const auto e =
      Cli({"evaluate", "--model", ws.Path("model.txt"), "--data", ws.data});
  CHECK(e.code == 0);
  CHECK(e.out.find("auc=") != std::string::npos);
}

TEST_CASE("baseline and exact fast agree on the support") {
  Workspace ws;
  REQUIRE(Cli({"train", "--data", ws.data, "--algo", "baseline", "--iters",
               "150", "--model-out", ws.Path("b.txt")})
              .code == 0);
  REQUIRE(Cli({"train", "--data", ws.data, "--algo", "fast", "--refresh",
               "exact", "--iters", "150", "--model-out", ws.Path("f.txt")})
              .code == 0);
  CHECK(Support(ReadModel(ws.Path("b.txt"))) ==
        Support(ReadModel(ws.Path("f.txt"))));
}

TEST_CASE("seeded runs reproduce the metrics file byte for byte") {
  Workspace ws;
  for (const std::string selector : {"bls", "noisymax"}) {
    std::vector<std::string> args = {
        "train",   "--data", ws.data,         "--private",    "--epsilon", "1",
        "--delta", "1e-6",   "--selector",    selector,       "--iters",   "80",
        "--seed",  "42",     "--omit-timing", "--metrics-out"};
    auto first = args, second = args;
    first.push_back(ws.Path("a.csv"));
    second.push_back(ws.Path("b.csv"));
    REQUIRE(Cli(first).code == 0);
    REQUIRE(Cli(second).code == 0);
    CHECK(Slurp(ws.Path("a.csv")) == Slurp(ws.Path("b.csv")));
  }
  const auto r = Cli({"train", "--data", ws.data, "--private", "--epsilon", "1",
                      "--delta", "1e-6", "--iters", "10"});
  CHECK(r.out.find("laplace_scale=") != std::string::npos);
}

TEST_CASE("lipschitz warning") {
  Workspace ws;
  std::ofstream(ws.Path("big.svm")) << "1 1:3\n0 2:1\n";
  const auto r = Cli({"train", "--data", ws.Path("big.svm"), "--iters", "5"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("bench writes a three-row csv") {
  Workspace ws;
  const auto r =
      Cli({"bench", "--data", ws.data, "--epsilon", "0.5", "--delta", "1e-6",
           "--iters", "30", "--repeats", "3", "--out", ws.Path("bench.csv")});
  REQUIRE(r.code == 0);
  std::istringstream csv(Slurp(ws.Path("bench.csv")));
  std::vector<std::string> lines;
  for (std::string line; std::getline(csv, line);) lines.push_back(line);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "method,median_seconds,speedup_vs_baseline,speedup_vs_noisymax");
  CHECK(lines[1].rfind("baseline,", 0) == 0);
  CHECK(lines[2].rfind("fast_bls,", 0) == 0);
  CHECK(lines[3].rfind("fast_noisymax,", 0) == 0);
  CHECK(Cli({"bench", "--data", ws.data, "--delta", "1e-6"}).code == 2);
}

}  // namespace
}  // namespace sparsefw
