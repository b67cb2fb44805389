#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "ugat/errors.hpp"
#include "ugat/series.hpp"

using ugat::AlphaVector;
using ugat::SeriesAccuracy;
using ugat::SeriesParams;
using ugat::SeriesSpec;

namespace {
constexpr double kZeta2 = 1.6449340668482264;  // sum of 1/n^2
}

TEST_CASE("homogeneous_sym base cases") {
  AlphaVector a1({0.5});
  CHECK(ugat::homogeneous_sym(0, a1) == 1.0);
  CHECK(ugat::homogeneous_sym(3, a1) == doctest::Approx(0.125).epsilon(1e-14));

  AlphaVector a2({0.5, 0.5});
  CHECK(ugat::homogeneous_sym(0, a2) == 1.0);
  CHECK(ugat::homogeneous_sym(1, a2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ugat::homogeneous_sym(2, a2) == doctest::Approx(0.75).epsilon(1e-14));

  AlphaVector a3({0.2, 0.3, 0.4});
  CHECK(ugat::homogeneous_sym(1, a3) == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("homogeneous_sym matches composition enumeration") {
  std::vector<std::vector<double>> banks = {
      {0.7}, {0.2, 0.9}, {0.35, 0.5, 0.8}, {1.0, 0.4, 0.6}};
  for (const auto& w : banks) {
    AlphaVector a(w);
    for (int t = 0; t <= 8; ++t) {
      double got = ugat::homogeneous_sym(t, a);
      double want = oracle::homogeneous_sym_enumerated(t, w);
      CHECK(got == doctest::Approx(want).epsilon(1e-13));
    }
  }
}

TEST_CASE("homogeneous_sym rejects negative index") {
  AlphaVector a({0.5});
  CHECK_THROWS_AS(ugat::homogeneous_sym(-1, a), ugat::IndexOutOfRange);
}

TEST_CASE("alpha vector validation") {
  CHECK_THROWS_AS(AlphaVector({}), ugat::DimensionMismatch);
  CHECK_THROWS_AS(AlphaVector({0.0}), ugat::DivergentParameters);
  CHECK_THROWS_AS(AlphaVector({-0.2}), ugat::DivergentParameters);
  CHECK_THROWS_AS(AlphaVector({0.5, 1.2}), ugat::DivergentParameters);
  CHECK_NOTHROW(AlphaVector({1.0, 0.5}));
}

TEST_CASE("series_M geometric value") {
  AlphaVector a({0.5});
  double got = ugat::series_M(a, SeriesParams{1.0, 0.0});
  CHECK(std::fabs(got - 2.0) <= 1e-11);
}

TEST_CASE("series_M reproduces the quadratic zeta value") {
  AlphaVector a({1.0});
  double got = ugat::series_M(a, SeriesParams{1.0, 2.0},
                              SeriesAccuracy{1e-10, 1000000});
  CHECK(std::fabs(got - kZeta2) <= 1e-10);
}

TEST_CASE("series_M two dimensions matches lattice oracle") {
  std::vector<double> w = {0.5, 0.5};
  AlphaVector a(w);
  double got = ugat::series_M(a, SeriesParams{1.0, 1.0});
  double want = oracle::series_lattice(w, 1.0, 1.0, 220);
  CHECK(got == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("series_M three dimensions matches lattice oracle") {
  std::vector<double> w = {0.3, 0.45, 0.6};
  AlphaVector a(w);
  double got = ugat::series_M(a, SeriesParams{2.5, 1.5});
  double want = oracle::series_lattice(w, 2.5, 1.5, 140);
  CHECK(got == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("series_M large beta keeps relative accuracy") {
  std::vector<double> w = {0.8792, 0.9059, 0.9076};
  AlphaVector a(w);
  double s = 8.0;
  double beta = 954.954;
  double got = ugat::series_M(a, SeriesParams{beta, s});
  CHECK(got > 0.0);
  CHECK(std::isfinite(got));
  double logged = ugat::log_series_M(a, SeriesParams{beta, s});
  CHECK(std::log(got) == doctest::Approx(logged).epsilon(1e-13));
  double direct = oracle::series_by_total(w, beta, s, 600);
  CHECK(got == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("log_series_M agrees with the log of series_M") {
  std::vector<SeriesParams> ps = {{1.0, 0.0}, {0.5, 2.0}, {1000.0, 5.0}};
  AlphaVector a({0.4, 0.7});
  for (const auto& p : ps) {
    double lhs = std::log(ugat::series_M(a, p));
    double rhs = ugat::log_series_M(a, p);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("series_M_shifted equals series_M at the shifted offset") {
  AlphaVector a({0.6, 0.35});
  SeriesParams p{2.0, 1.5};
  for (std::int64_t shift : {0, 1, 2, 7, 40}) {
    double lhs = ugat::series_M_shifted(a, p, shift);
    double rhs = ugat::series_M(a, SeriesParams{2.0 + shift, 1.5});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("series_M_shifted geometric is shift invariant at s zero") {
  AlphaVector a({0.5});
  SeriesParams p{1.0, 0.0};
  CHECK(ugat::series_M_shifted(a, p, 9) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("series_M_shifted zeta loses its leading term") {
  AlphaVector a({1.0});
  SeriesParams p{1.0, 2.0};
  double got = ugat::series_M_shifted(a, p, 1, SeriesAccuracy{1e-10, 1000000});
  CHECK(std::fabs(got - (kZeta2 - 1.0)) <= 2e-10);
}

TEST_CASE("series_tail_bound dominates true geometric tail") {
  AlphaVector a({0.5});
  SeriesParams p{1.0, 0.0};
  for (std::int64_t T : {0, 1, 5, 10, 24}) {
    double bound = ugat::series_tail_bound(a, p, T);
    double true_tail = std::pow(0.5, static_cast<double>(T));
    CHECK(bound >= true_tail * (1.0 - 1e-12));
    CHECK(bound <= 8.0 * true_tail);
  }
}

TEST_CASE("series_tail_bound dominates a two dimensional tail") {
  std::vector<double> w = {0.9, 0.9};
  AlphaVector a(w);
  SeriesParams p{1.0, 2.0};
  std::int64_t T = 50;
  oracle::KahanSum tail;
  for (int t = static_cast<int>(T) + 1; t <= 4000; ++t)
    tail.add(oracle::homogeneous_sym_enumerated(t, w) *
             std::pow(t + 1.0, -2.0));
  double bound = ugat::series_tail_bound(a, p, T);
  CHECK(bound >= tail.value());
}

TEST_CASE("series_tail_bound is nonincreasing and vanishes") {
  std::vector<std::vector<double>> banks = {{0.5}, {0.95, 0.8}, {1.0}};
  std::vector<SeriesParams> ps = {{1.0, 0.0}, {2.0, 1.0}, {1.0, 2.5}};
  for (std::size_t k = 0; k < banks.size(); ++k) {
    AlphaVector a(banks[k]);
    double prev = std::numeric_limits<double>::infinity();
    for (std::int64_t T : {0, 1, 2, 5, 10, 20, 50, 200, 1000}) {
      double b = ugat::series_tail_bound(a, ps[k], T);
      CHECK(b <= prev * (1.0 + 1e-12));
      prev = b;
    }
    CHECK(prev < 1e-4);
  }
}

TEST_CASE("tolerance refinement stays within the coarser budget") {
  std::mt19937_64 rng(20240211);
  std::uniform_real_distribution<double> ua(0.05, 0.95);
  std::uniform_real_distribution<double> ub(0.1, 1000.0);
  std::uniform_real_distribution<double> us(0.0, 8.0);
  std::uniform_int_distribution<int> ur(1, 3);
  double tau = 1e-8;
  for (int k = 0; k < 60; ++k) {
    int r = ur(rng);
    std::vector<double> w;
    for (int j = 0; j < r; ++j) w.push_back(ua(rng));
    AlphaVector a(w);
    SeriesParams p{ub(rng), us(rng)};
    double coarse = ugat::series_M(a, p, SeriesAccuracy{tau, 1000000});
    double fine = ugat::series_M(a, p, SeriesAccuracy{tau / 10.0, 1000000});
    double scale = std::max(1.0, std::pow(p.beta, -p.s));
    CHECK(std::fabs(coarse - fine) <= tau * scale);
  }
}

TEST_CASE("tolerance refinement with a unit weight") {
  AlphaVector a({1.0});
  SeriesParams p{1.0, 2.0};
  double tau = 1e-8;
  double coarse = ugat::series_M(a, p, SeriesAccuracy{tau, 1000000});
  double fine = ugat::series_M(a, p, SeriesAccuracy{tau / 10.0, 1000000});
  CHECK(std::fabs(coarse - fine) <= tau);
}

TEST_CASE("series_M is strictly decreasing in beta for positive s") {
  AlphaVector a({0.4, 0.8});
  double lo = ugat::series_M(a, SeriesParams{1.5, 1.5});
  double hi = ugat::series_M(a, SeriesParams{2.0, 1.5});
  CHECK(lo > hi);
}

TEST_CASE("series_M is strictly increasing in each alpha") {
  double base = ugat::series_M(AlphaVector({0.4, 0.8}), SeriesParams{2.0, 1.0});
  double up0 = ugat::series_M(AlphaVector({0.45, 0.8}), SeriesParams{2.0, 1.0});
  double up1 = ugat::series_M(AlphaVector({0.4, 0.85}), SeriesParams{2.0, 1.0});
  CHECK(up0 > base);
  CHECK(up1 > base);
}

TEST_CASE("convergence guard") {
  CHECK_THROWS_AS(
      ugat::check_series_convergence(AlphaVector({1.0}), SeriesParams{1.0, 1.0}),
      ugat::DivergentParameters);
  CHECK_THROWS_AS(ugat::check_series_convergence(AlphaVector({1.0, 0.5}),
                                                 SeriesParams{1.0, 2.0}),
                  ugat::DivergentParameters);
  CHECK_NOTHROW(ugat::check_series_convergence(AlphaVector({1.0}),
                                               SeriesParams{1.0, 1.5}));
  CHECK_THROWS_AS(
      ugat::check_series_convergence(AlphaVector({0.5}), SeriesParams{0.0, 1.0}),
      ugat::DivergentParameters);
  CHECK_THROWS_AS(
      ugat::check_series_convergence(AlphaVector({0.5}), SeriesParams{-1.0, 0.0}),
      ugat::DivergentParameters);
}

TEST_CASE("series_M near unit weight exhausts the term budget") {
  AlphaVector a({0.9999999});
  CHECK_THROWS_AS(
      ugat::series_M(a, SeriesParams{1.0, 0.0}, SeriesAccuracy{1e-12, 60}),
      ugat::NonConvergent);
}

TEST_CASE("series_value matches series_M") {
  std::vector<double> w = {0.5, 0.25};
  double lhs = ugat::series_value(SeriesSpec{w, 0.0, 1.0, false}, 2.0);
  double rhs = ugat::series_M(AlphaVector(w), SeriesParams{2.0, 1.0});
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("series_value accepts zero weights") {
  double got = ugat::series_value(SeriesSpec{{0.0, 0.0}, 0.0, 0.0, false}, 1.0);
  CHECK(got == 1.0);
}

TEST_CASE("series_ratio of identical specs is exactly one") {
  SeriesSpec spec{{0.7, 0.9, 0.4}, 0.0, 2.0, false};
  CHECK(ugat::series_ratio(spec, spec, 3.0) == 1.0);
}

TEST_CASE("series_ratio reproduces shifted zeta ratio") {
  SeriesSpec num{{1.0}, 1.0, 2.0, false};
  SeriesSpec den{{1.0}, 0.0, 2.0, false};
  double got = ugat::series_ratio(num, den, 1.0, SeriesAccuracy{1e-11, 1000000});
  double want = (kZeta2 - 1.0) / kZeta2;
  CHECK(std::fabs(got - want) <= 1e-10);
}

TEST_CASE("series_ratio matches independently evaluated series") {
  std::vector<double> w = {0.6, 0.85};
  SeriesSpec num{w, 3.0, 2.5, false};
  SeriesSpec den{w, 0.0, 2.5, false};
  double got = ugat::series_ratio(num, den, 1.5);
  double want = ugat::series_M(AlphaVector(w), SeriesParams{4.5, 2.5}) /
                ugat::series_M(AlphaVector(w), SeriesParams{1.5, 2.5});
  CHECK(got == doctest::Approx(want).epsilon(1e-11));
}

TEST_CASE("log weighted series matches a direct sum") {
  std::vector<double> w = {0.55, 0.3};
  double beta = 2.0;
  double s = 1.25;
  double got = ugat::series_value(SeriesSpec{w, 0.0, s, true}, beta);
  oracle::KahanSum acc;
  for (int t = 0; t <= 400; ++t)
    acc.add(oracle::homogeneous_sym_enumerated(t, w) *
            std::log(t + beta) * std::pow(t + beta, -s));
  CHECK(got == doctest::Approx(acc.value()).epsilon(1e-11));
}
