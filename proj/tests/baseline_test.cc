#include "sparsefw/baseline.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sparsefw/dataset.h"
#include "sparsefw/loss.h"
#include "test_util.h"

namespace sparsefw {
namespace {

using testing::L0Norm;
using testing::L1Norm;

Dataset TwoPoints() {
  const std::vector<Triple> t = {{0, 0, 1.0}, {1, 1, 1.0}};
  return {SparseMatrix::FromTriples(t, 2, 2), {1, 0}};
}

TrainConfig Nonprivate(double lambda, std::size_t iters) {
  TrainConfig c;
  c.lambda = lambda;
  c.iterations = iters;
  return c;
}

TEST_CASE("step sizes and vertex signs") {
  CHECK(StepSize(1) == doctest::Approx(2.0 / 3.0));
  CHECK(StepSize(2) == doctest::Approx(0.5));
  CHECK(StepSize(3) == doctest::Approx(0.4));
  CHECK(VertexSign(0.0) == 1.0);
  CHECK(VertexSign(-0.0) == 1.0);
  CHECK(VertexSign(-2.0) == -1.0);
}

TEST_CASE("T = 1 returns zeros") {
  RandomStream rng(0);
  const TrainResult r = TrainBaseline(TwoPoints(), Nonprivate(1.0, 1), rng);
  CHECK(r.weights == std::vector<double>{0.0, 0.0});
  CHECK(r.selections.empty());
}

TEST_CASE("two separable points") {
  const Dataset d = TwoPoints();
  RandomStream rng(0);
  std::vector<MetricsRow> rows;
  const TrainResult r =
      TrainBaseline(d, Nonprivate(1.0, 50), rng,
                    [&rows](const MetricsRow& row) { rows.push_back(row); });
  // At w = 0: alpha = (0.25 - 0.5, 0.25) so |alpha| ties and index 0 wins.
  REQUIRE(!r.selections.empty());
  CHECK(r.selections[0] == 0);
  CHECK(r.gaps[0] == doctest::Approx(0.25));
  for (double g : r.gaps) CHECK(g > 0.0);
  CHECK(Objective(d, r.weights) < std::log(2.0));
  CHECK(r.weights[0] > 0.0);
  CHECK(r.weights[1] < 0.0);
  REQUIRE(rows.size() == 49);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    CHECK(rows[t].iteration == t + 1);
    CHECK(rows[t].g == r.gaps[t]);
    CHECK(rows[t].q_pops == 2);
    CHECK(rows[t].flops > 0);
  }
}

TEST_CASE("matches the dense reference run") {
  const Dataset d = GenerateSynthetic({120, 400, 0.03, 10, 5});
  RandomStream rng(0);
  const TrainResult r = TrainBaseline(d, Nonprivate(50.0, 150), rng);
  const testing::ReferenceRun ref = testing::ReferenceFrankWolfe(d, 50.0, 150);
  CHECK(r.selections == ref.selections);
  for (std::size_t t = 0; t < r.gaps.size(); ++t) {
    CHECK(r.gaps[t] == doctest::Approx(ref.gaps[t]).epsilon(1e-9));
  }
  for (std::size_t k = 0; k < d.cols(); ++k) {
    CHECK(r.weights[k] == doctest::Approx(ref.weights[k]).epsilon(1e-12));
  }
}

TEST_CASE("iterates stay in the ball and grow support by at most one") {
  const Dataset d = GenerateSynthetic({100, 300, 0.05, 10, 6});
  for (std::size_t iters : {2u, 3u, 10u, 40u, 120u}) {
    RandomStream rng(0);
    const TrainResult r = TrainBaseline(d, Nonprivate(5.0, iters), rng);
    CHECK(L1Norm(r.weights) <= 5.0 * (1.0 + 1e-12));
    CHECK(L0Norm(r.weights) <= iters - 1);
    for (double g : r.gaps) CHECK(g >= 0.0);
  }
}

TEST_CASE("nonprivate runs are deterministic") {
  const Dataset d = GenerateSynthetic({100, 300, 0.05, 10, 7});
  RandomStream a(1), b(2);
  const TrainResult ra = TrainBaseline(d, Nonprivate(50.0, 80), a);
  const TrainResult rb = TrainBaseline(d, Nonprivate(50.0, 80), b);
  CHECK(ra.selections == rb.selections);
  CHECK(ra.weights == rb.weights);
  CHECK(ra.total_flops == rb.total_flops);
}

TEST_CASE("private runs depend only on the seed") {
  const Dataset d = GenerateSynthetic({100, 300, 0.05, 10, 7});
  TrainConfig c = Nonprivate(50.0, 60);
  c.private_mode = true;
  c.epsilon = 0.5;
  c.delta = 1e-6;
  RandomStream a(1), b(1), other(2);
  const TrainResult ra = TrainBaseline(d, c, a);
  const TrainResult rb = TrainBaseline(d, c, b);
  const TrainResult rc = TrainBaseline(d, c, other);
  CHECK(ra.selections == rb.selections);
  CHECK(ra.weights == rb.weights);
  CHECK(ra.selections != rc.selections);
  CHECK(L1Norm(ra.weights) <= 50.0 * (1.0 + 1e-12));
}

TEST_CASE("invalid configuration") {
  RandomStream rng(0);
  CHECK_THROWS_AS(TrainBaseline(TwoPoints(), Nonprivate(0.0, 10), rng),
                  std::invalid_argument);
  TrainConfig c = Nonprivate(1.0, 10);
  c.private_mode = true;
  c.epsilon = 1.0;
  CHECK_THROWS_AS(TrainBaseline(TwoPoints(), c, rng), std::invalid_argument);
}

}  // namespace
}  // namespace sparsefw
