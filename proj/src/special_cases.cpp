#include "ugat/special_cases.hpp"

#include <cmath>
#include <utility>

#include "ugat/errors.hpp"

namespace ugat {
namespace {

void check_ratio(double p, const char* what) {
  if (!std::isfinite(p) || p <= 0.0 || p >= 1.0) {
    throw DivergentParameters(std::string(what) + " must lie in (0, 1)");
  }
}

void check_weight(double theta) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta > 1.0) {
    throw DivergentParameters("theta must lie in (0, 1]");
  }
}

void check_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DivergentParameters(std::string(what) + " must be positive");
  }
}

void check_exponent(double c, const char* what) {
  if (!std::isfinite(c) || c <= 1.0) {
    throw DivergentParameters(std::string(what) +
                              " must exceed 1 for a summable power law");
  }
}

}  // namespace

ShiftedDistribution::ShiftedDistribution(UgatParams base,
                                         std::int64_t support_offset)
    : base_(std::move(base)), offset_(support_offset) {
  if (base_.dimension() != 1) {
    throw DimensionMismatch("shifted distribution needs a univariate base");
  }
  if (support_offset < 0) {
    throw IndexOutOfRange("support offset must be nonnegative");
  }
}

double ShiftedDistribution::pmf(std::int64_t x) const {
  if (x < offset_) return 0.0;
  return marginal_pmf(base_, 0, x - offset_);
}

double ShiftedDistribution::cdf(std::int64_t x) const {
  if (x < offset_) return 0.0;
  return marginal_cdf(base_, 0, x - offset_);
}

double ShiftedDistribution::ccdf(std::int64_t x) const {
  if (x < offset_) return 1.0;
  return marginal_ccdf(base_, 0, x - offset_);
}

double ShiftedDistribution::mean() const {
  return raw_moment(base_, 0, 1) + static_cast<double>(offset_);
}

ShiftedDistribution make_lerch(double p, double a, double c,
                               SeriesAccuracy accuracy) {
  check_ratio(p, "p");
  check_positive(a, "a");
  if (!std::isfinite(c)) throw DivergentParameters("c must be finite");
  return ShiftedDistribution(UgatParams(AlphaVector({p}), a + 1.0, c, accuracy), 1);
}

ShiftedDistribution make_hurwitz_lerch_zeta(double theta, double a, double s,
                                            SeriesAccuracy accuracy) {
  check_weight(theta);
  check_positive(a, "a");
  if (!std::isfinite(s)) throw DivergentParameters("s must be finite");
  if (theta == 1.0 && s <= 0.0) {
    throw DivergentParameters("theta = 1 needs s > 0 for a summable tail");
  }
  return ShiftedDistribution(UgatParams(AlphaVector({theta}), a + 1.0, s + 1.0, accuracy),
                             1);
}

ShiftedDistribution make_good(double theta, double s,
                              SeriesAccuracy accuracy) {
  check_weight(theta);
  if (!std::isfinite(s)) throw DivergentParameters("s must be finite");
  if (theta == 1.0 && s <= 0.0) {
    throw DivergentParameters("theta = 1 needs s > 0 for a summable tail");
  }
  return ShiftedDistribution(UgatParams(AlphaVector({theta}), 1.0, s + 1.0, accuracy), 1);
}

ShiftedDistribution make_hurwitz_zeta(double b, double sigma,
                                      SeriesAccuracy accuracy) {
  check_positive(b, "b");
  check_exponent(sigma, "sigma");
  return ShiftedDistribution(UgatParams(AlphaVector({1.0}), b, sigma, accuracy), 0);
}

ShiftedDistribution make_zipf_mandelbrot(double a, double c,
                                         SeriesAccuracy accuracy) {
  check_positive(a, "a");
  check_exponent(c, "c");
  return ShiftedDistribution(UgatParams(AlphaVector({1.0}), a + 1.0, c, accuracy), 1);
}

ShiftedDistribution make_discrete_pareto(double c, SeriesAccuracy accuracy) {
  check_exponent(c, "c");
  return ShiftedDistribution(UgatParams(AlphaVector({1.0}), 1.0, c, accuracy), 1);
}

ShiftedDistribution make_geometric(double p, bool start_at_zero,
                                   SeriesAccuracy accuracy) {
  check_ratio(p, "p");
  return ShiftedDistribution(UgatParams(AlphaVector({p}), 1.0, 0.0, accuracy),
                             start_at_zero ? 0 : 1);
}

}  // namespace ugat
