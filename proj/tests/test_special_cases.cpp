#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "oracles.hpp"
#include "ugat/errors.hpp"
#include "ugat/reliability.hpp"
#include "ugat/special_cases.hpp"

using ugat::ShiftedDistribution;

namespace {

constexpr double kZeta2 = 1.6449340668482264;

const ugat::SeriesAccuracy kTight{1e-14, 1000000};

// sum_{y=from}^inf (y+a)^{-c}, Euler-Maclaurin from a distant cutoff.
double power_tail(double a, double c, double from) {
  double t = from + a;
  return std::pow(t, 1.0 - c) / (c - 1.0) + 0.5 * std::pow(t, -c) +
         c * std::pow(t, -c - 1.0) / 12.0 -
         c * (c + 1.0) * (c + 2.0) * std::pow(t, -c - 3.0) / 720.0;
}

// sum_{y=1}^inf (y+a)^{-c} for c > 1.
double power_norm(double a, double c) {
  oracle::KahanSum acc;
  const std::int64_t cut = 100000;
  for (std::int64_t y = 1; y < cut; ++y) acc.add(std::pow(y + a, -c));
  acc.add(power_tail(a, c, static_cast<double>(cut)));
  return acc.value();
}

// sum_{y=1}^inf p^y (y+a)^{-c} for p < 1; c may be negative.
double weighted_power_norm(double p, double a, double c) {
  oracle::KahanSum acc;
  double py = 1.0;
  for (int y = 1; y <= 20000; ++y) {
    py *= p;
    double term = py * std::pow(y + a, -c);
    acc.add(term);
    if (y > 50 && term < 1e-20 * acc.value()) break;
  }
  return acc.value();
}

}  // namespace

TEST_CASE("lerch pmf matches its display formula") {
  const double p = 0.6, a = 1.5, c = 2.3;
  ShiftedDistribution d = ugat::make_lerch(p, a, c, kTight);
  REQUIRE(d.support_offset() == 1);
  const double norm = weighted_power_norm(p, a, c);
  for (std::int64_t x = 1; x <= 50; ++x) {
    double want = std::pow(p, x) * std::pow(x + a, -c) / norm;
    CHECK(d.pmf(x) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(d.pmf(0) == 0.0);
  CHECK(d.cdf(0) == 0.0);
  CHECK(d.ccdf(0) == 1.0);
}

TEST_CASE("lerch successive pmf ratio follows p ((x+a)/(x+1+a))^c") {
  const double p = 0.35, a = 0.8, c = -1.7;
  ShiftedDistribution d = ugat::make_lerch(p, a, c, kTight);
  for (std::int64_t x = 1; x <= 40; ++x) {
    double want = p * std::pow((x + a) / (x + 1.0 + a), c);
    CHECK(d.pmf(x + 1) / d.pmf(x) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("lerch with zero exponent reduces to a geometric law") {
  const double p = 0.45;
  ShiftedDistribution d = ugat::make_lerch(p, 2.0, 0.0, kTight);
  for (std::int64_t x = 1; x <= 30; ++x) {
    double want = std::pow(p, x - 1) * (1.0 - p);
    CHECK(d.pmf(x) == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("hurwitz lerch zeta pmf matches its display formula") {
  const double theta = 0.7, a = 2.0, s = 1.2;
  ShiftedDistribution d = ugat::make_hurwitz_lerch_zeta(theta, a, s, kTight);
  const double norm = weighted_power_norm(theta, a, s + 1.0);
  for (std::int64_t x = 1; x <= 50; ++x) {
    double want = std::pow(theta, x) * std::pow(x + a, -(s + 1.0)) / norm;
    CHECK(d.pmf(x) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("hurwitz lerch zeta with unit weight matches a shifted hurwitz zeta") {
  ShiftedDistribution hlz = ugat::make_hurwitz_lerch_zeta(1.0, 1.0, 1.5, kTight);
  ShiftedDistribution hz = ugat::make_hurwitz_zeta(2.0, 2.5, kTight);
  for (std::int64_t x = 1; x <= 20; ++x) {
    CHECK(hlz.pmf(x) == doctest::Approx(hz.pmf(x - 1)).epsilon(1e-13));
  }
}

TEST_CASE("good pmf matches its display formula") {
  const double theta = 0.55, s = 0.8;
  ShiftedDistribution d = ugat::make_good(theta, s, kTight);
  const double norm = weighted_power_norm(theta, 0.0, s + 1.0);
  for (std::int64_t x = 1; x <= 50; ++x) {
    double want = std::pow(theta, x) * std::pow(x, -(s + 1.0)) / norm;
    CHECK(d.pmf(x) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("hurwitz zeta pmf matches its display formula on x >= 0") {
  const double b = 1.3, sigma = 2.2;
  ShiftedDistribution d = ugat::make_hurwitz_zeta(b, sigma, kTight);
  REQUIRE(d.support_offset() == 0);
  const double norm = std::pow(b, -sigma) + power_norm(b, sigma);
  for (std::int64_t x = 0; x <= 50; ++x) {
    double want = std::pow(x + b, -sigma) / norm;
    CHECK(d.pmf(x) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("hurwitz zeta normalizer at b = 1, sigma = 2 is zeta(2)") {
  ShiftedDistribution d = ugat::make_hurwitz_zeta(1.0, 2.0, kTight);
  CHECK(d.base().normalizer() == doctest::Approx(kZeta2).epsilon(1e-10));
  CHECK(d.pmf(0) == doctest::Approx(1.0 / kZeta2).epsilon(1e-10));
}

TEST_CASE("zipf mandelbrot pmf matches its display formula") {
  const double a = 2.7, c = 1.8;
  ShiftedDistribution d = ugat::make_zipf_mandelbrot(a, c, kTight);
  const double norm = power_norm(a, c);
  for (std::int64_t x = 1; x <= 50; ++x) {
    double want = std::pow(x + a, -c) / norm;
    CHECK(d.pmf(x) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(d.pmf(0) == 0.0);
}

TEST_CASE("discrete pareto with exponent 2 puts 1/zeta(2) at x = 1") {
  ShiftedDistribution d = ugat::make_discrete_pareto(2.0, kTight);
  CHECK(d.pmf(1) == doctest::Approx(1.0 / kZeta2).epsilon(1e-10));
  const double norm = power_norm(0.0, 2.0);
  for (std::int64_t x = 1; x <= 50; ++x) {
    double want = std::pow(static_cast<double>(x), -2.0) / norm;
    CHECK(d.pmf(x) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("geometric pmf is exact on both supports") {
  const double p = 0.5;
  ShiftedDistribution on_n = ugat::make_geometric(p);
  for (std::int64_t x = 1; x <= 30; ++x) {
    CHECK(on_n.pmf(x) == std::pow(p, x - 1) * (1.0 - p));
  }
  CHECK(on_n.pmf(0) == 0.0);
  CHECK(on_n.ccdf(3) == 0.125);

  ShiftedDistribution on_n0 = ugat::make_geometric(p, true);
  REQUIRE(on_n0.support_offset() == 0);
  CHECK(on_n0.pmf(3) == 0.0625);
  for (std::int64_t x = 0; x <= 30; ++x) {
    CHECK(on_n0.pmf(x) == std::pow(p, x) * (1.0 - p));
  }
}

TEST_CASE("geometric hazard is the constant 1 - p") {
  const double p = 0.37;
  ShiftedDistribution d = ugat::make_geometric(p);
  for (std::int64_t x = 0; x <= 12; ++x) {
    CHECK(ugat::hazard_component(d.base(), 0, {x}) == 1.0 - p);
  }
}

TEST_CASE("shifted evaluations sum and telescope consistently") {
  ShiftedDistribution models[] = {
      ugat::make_lerch(0.6, 1.5, 2.3),
      ugat::make_hurwitz_lerch_zeta(0.7, 2.0, 1.2),
      ugat::make_good(0.55, 0.8),
      ugat::make_hurwitz_zeta(1.3, 2.2),
      ugat::make_zipf_mandelbrot(2.7, 1.8),
      ugat::make_discrete_pareto(2.0),
      ugat::make_geometric(0.5),
  };
  for (const ShiftedDistribution& d : models) {
    oracle::KahanSum acc;
    const std::int64_t hi = d.support_offset() + 60;
    for (std::int64_t x = 0; x <= hi; ++x) acc.add(d.pmf(x));
    CHECK(acc.value() + d.ccdf(hi) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d.cdf(hi) + d.ccdf(hi) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(acc.value() == doctest::Approx(d.cdf(hi)).epsilon(1e-11));
  }
}

TEST_CASE("means match closed forms where they exist") {
  const double p = 0.4;
  ShiftedDistribution geo = ugat::make_geometric(p);
  CHECK(geo.mean() == doctest::Approx(1.0 / (1.0 - p)).epsilon(1e-10));
  ShiftedDistribution geo0 = ugat::make_geometric(p, true);
  CHECK(geo0.mean() == doctest::Approx(p / (1.0 - p)).epsilon(1e-10));

  // E[X] for pmf (x+b)^{-sigma}/Z on x >= 0 via two oracle sums.
  const double b = 1.0, sigma = 4.5;
  ShiftedDistribution hz = ugat::make_hurwitz_zeta(b, sigma);
  double z0 = std::pow(b, -sigma) + power_norm(b, sigma);
  oracle::KahanSum num;
  for (std::int64_t x = 1; x <= 100000; ++x) {
    num.add(x * std::pow(x + b, -sigma));
  }
  CHECK(hz.mean() == doctest::Approx(num.value() / z0).epsilon(1e-9));
}

TEST_CASE("constructor preconditions are enforced") {
  CHECK_THROWS_AS(ugat::make_lerch(1.0, 1.0, 2.0), ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_lerch(0.5, 0.0, 2.0), ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_hurwitz_lerch_zeta(1.2, 1.0, 1.0),
                  ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_hurwitz_lerch_zeta(1.0, 1.0, 0.0),
                  ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_good(0.0, 1.0), ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_hurwitz_zeta(1.0, 1.0), ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_hurwitz_zeta(-2.0, 3.0),
                  ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_zipf_mandelbrot(2.0, 0.9),
                  ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_discrete_pareto(1.0), ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_geometric(0.0), ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::make_geometric(1.0), ugat::DivergentParameters);
}
