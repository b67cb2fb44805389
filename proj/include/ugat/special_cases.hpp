#ifndef UGAT_SPECIAL_CASES_HPP
#define UGAT_SPECIAL_CASES_HPP

#include <cstdint>

#include "ugat/distribution.hpp"

namespace ugat {

// One-dimensional family member whose printed support starts at
// support_offset; evaluation at x delegates to the base law at
// x - support_offset.
class ShiftedDistribution {
 public:
  ShiftedDistribution(UgatParams base, std::int64_t support_offset);

  const UgatParams& base() const { return base_; }
  std::int64_t support_offset() const { return offset_; }

  double pmf(std::int64_t x) const;
  double cdf(std::int64_t x) const;
  double ccdf(std::int64_t x) const;
  double mean() const;

 private:
  UgatParams base_;
  std::int64_t offset_;
};

// P(X=x) proportional to p^x (x+a)^{-c} on x >= 1; c may be negative.
ShiftedDistribution make_lerch(double p, double a, double c,
                               SeriesAccuracy accuracy = {});

// P(X=x) proportional to theta^x (x+a)^{-(s+1)} on x >= 1.
ShiftedDistribution make_hurwitz_lerch_zeta(double theta, double a, double s,
                                            SeriesAccuracy accuracy = {});

// P(X=x) proportional to theta^x x^{-(s+1)} on x >= 1.
ShiftedDistribution make_good(double theta, double s,
                              SeriesAccuracy accuracy = {});

// P(X=x) = (x+b)^{-sigma} / zeta(sigma, b) on x >= 0; needs sigma > 1.
ShiftedDistribution make_hurwitz_zeta(double b, double sigma,
                                      SeriesAccuracy accuracy = {});

// P(X=x) proportional to (x+a)^{-c} on x >= 1; needs c > 1.
ShiftedDistribution make_zipf_mandelbrot(double a, double c,
                                         SeriesAccuracy accuracy = {});

// P(X=x) = x^{-c} / zeta(c) on x >= 1; needs c > 1.
ShiftedDistribution make_discrete_pareto(double c,
                                         SeriesAccuracy accuracy = {});

// P(X=x) = p^{x-1}(1-p) on x >= 1, or the {0,1,...} variant.
ShiftedDistribution make_geometric(double p, bool start_at_zero = false,
                                   SeriesAccuracy accuracy = {});

}  // namespace ugat

#endif
