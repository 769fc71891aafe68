#include "sparsefw/privacy.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

namespace sparsefw {
namespace {

PrivacyParams Collapsed() { return {1.0, std::exp(-1.0), 1, 1.0, 1.0, 1}; }
PrivacyParams Rcv1() { return {1.0, 1e-6, 4000, 50.0, 1.0, 20242}; }

// Reference values below were evaluated to 40 significant digits.
TEST_CASE("laplace scale") {
  CHECK(LaplaceScale(Collapsed()) ==
        doctest::Approx(2.8284271247461901).epsilon(1e-14));
  CHECK(LaplaceScale(Rcv1()) ==
        doctest::Approx(1.6423852744482857).epsilon(1e-13));
  PrivacyParams doubled = Rcv1();
  doubled.n *= 2;
  CHECK(LaplaceScale(doubled) ==
        doctest::Approx(LaplaceScale(Rcv1()) / 2.0).epsilon(1e-15));
  PrivacyParams long_run = Rcv1();
  long_run.epsilon = 0.1;
  long_run.t_max = 400000;
  CHECK(LaplaceScale(long_run) ==
        doctest::Approx(164.23852744482857).epsilon(1e-13));
}

TEST_CASE("exponential mechanism scale") {
  CHECK(ExpMechScale(Collapsed()) ==
        doctest::Approx(0.17677669529663688).epsilon(1e-14));
  CHECK(ExpMechScale(Rcv1()) ==
        doctest::Approx(0.30443526727792984).epsilon(1e-13));
  PrivacyParams small = Rcv1();
  small.epsilon = 0.1;
  CHECK(ExpMechScale(small) / ExpMechScale(Rcv1()) ==
        doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("per-step epsilon") {
  CHECK(PerStepEpsilon(Collapsed()) ==
        doctest::Approx(0.35355339059327376).epsilon(1e-14));
  PrivacyParams quad = Rcv1();
  quad.t_max *= 4;
  CHECK(PerStepEpsilon(quad) ==
        doctest::Approx(PerStepEpsilon(Rcv1()) / 2.0).epsilon(1e-14));
  CHECK(PerStepEpsilon(Rcv1()) ==
        doctest::Approx(0.0015039782001676210).epsilon(1e-13));
  PrivacyParams long_run = Rcv1();
  long_run.epsilon = 0.1;
  long_run.t_max = 400000;
  CHECK(PerStepEpsilon(long_run) ==
        doctest::Approx(1.5039782001676210e-5).epsilon(1e-13));
}

TEST_CASE("per-step epsilon composes back to epsilon") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    PrivacyParams p = Rcv1();
    p.epsilon = std::pow(10.0, -3.0 + 4.0 * unit(rng));
    p.delta = std::pow(10.0, -12.0 + 11.0 * unit(rng));
    p.t_max = 1 + static_cast<std::size_t>(1e6 * unit(rng));
    const double recomposed =
        PerStepEpsilon(p) * std::sqrt(8.0 * p.t_max * std::log(1.0 / p.delta));
    CHECK(recomposed == doctest::Approx(p.epsilon).epsilon(1e-14));
  }
}

TEST_CASE("scales move monotonically with each parameter") {
  const PrivacyParams base = Rcv1();
  auto bumped = [&](auto mutate) {
    PrivacyParams p = base;
    mutate(p);
    return p;
  };
  const double lap = LaplaceScale(base);
  const double em = ExpMechScale(base);
  const PrivacyParams more_eps =
      bumped([](PrivacyParams& p) { p.epsilon *= 2; });
  const PrivacyParams more_delta =
      bumped([](PrivacyParams& p) { p.delta *= 10; });
  const PrivacyParams more_t = bumped([](PrivacyParams& p) { p.t_max *= 3; });
  const PrivacyParams more_lambda =
      bumped([](PrivacyParams& p) { p.lambda *= 2; });
  const PrivacyParams more_l = bumped([](PrivacyParams& p) { p.l *= 2; });
  const PrivacyParams more_n = bumped([](PrivacyParams& p) { p.n *= 2; });
  CHECK(LaplaceScale(more_eps) < lap);
  CHECK(LaplaceScale(more_delta) < lap);
  CHECK(LaplaceScale(more_t) > lap);
  CHECK(LaplaceScale(more_lambda) > lap);
  CHECK(LaplaceScale(more_l) > lap);
  CHECK(LaplaceScale(more_n) < lap);
  CHECK(ExpMechScale(more_eps) > em);
  CHECK(ExpMechScale(more_delta) > em);
  CHECK(ExpMechScale(more_t) < em);
  CHECK(ExpMechScale(more_lambda) < em);
  CHECK(ExpMechScale(more_l) > em);
  CHECK(ExpMechScale(more_n) > em);
}

TEST_CASE("parameter validation") {
  auto invalid = [](auto mutate) {
    PrivacyParams p = Rcv1();
    mutate(p);
    return p;
  };
  CHECK_NOTHROW(Rcv1().Validate());
  CHECK_THROWS_AS(invalid([](PrivacyParams& p) { p.epsilon = 0; }).Validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(invalid([](PrivacyParams& p) { p.delta = 0; }).Validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(invalid([](PrivacyParams& p) { p.delta = 1; }).Validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(invalid([](PrivacyParams& p) { p.t_max = 0; }).Validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(invalid([](PrivacyParams& p) { p.lambda = -1; }).Validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(invalid([](PrivacyParams& p) { p.l = 0; }).Validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(invalid([](PrivacyParams& p) { p.n = 0; }).Validate(),
                  std::invalid_argument);
}

TEST_CASE("laplace inverse cdf") {
  CHECK(LaplaceFromUniform(0.0, 3.0) == 0.0);
  // F^{-1}(u) = -b sign(u) ln(1 - 2|u|).
  CHECK(LaplaceFromUniform(0.25, 2.0) == doctest::Approx(-2.0 * std::log(0.5)));
  CHECK(LaplaceFromUniform(-0.25, 2.0) == doctest::Approx(2.0 * std::log(0.5)));
  CHECK(LaplaceFromUniform(0.4999, 1.0) > 8.0);
}

TEST_CASE("laplace draws have the right mean and variance") {
  RandomStream rng(123);
  constexpr int kDraws = 1000000;
  double sum = 0.0, sum_sq = 0.0;
  for (int k = 0; k < kDraws; ++k) {
    const double x = SampleLaplace(1.0, rng);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / kDraws;
  const double var = sum_sq / kDraws - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 2.0) < 0.05);

  RandomStream a(9), b(9);
  for (int k = 0; k < 100; ++k)
    CHECK(SampleLaplace(2.5, a) == SampleLaplace(2.5, b));
}

}  // namespace
}  // namespace sparsefw
