#ifndef UGAT_SERIES_HPP
#define UGAT_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ugat {

// Accuracy budget shared by every truncated series evaluation.  abs_tol is a
// certified bound on the truncation error of the returned value; max_terms
// caps the shared summation index before NonConvergent is thrown.
struct SeriesAccuracy {
  double abs_tol = 1e-12;
  std::int64_t max_terms = 1000000;
};

// Weight vector for the summation kernel.  Entries must lie in (0, 1]; the
// constructor rejects anything else.
class AlphaVector {
 public:
  explicit AlphaVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  double max_value() const { return max_; }

 private:
  std::vector<double> values_;
  double max_;
};

// Offset/exponent pair of the summation kernel: terms decay like
// (t + beta)^{-s}.  beta must be positive.  Any real s is accepted while
// max(alpha) < 1; when max(alpha) == 1 convergence requires s > r.
struct SeriesParams {
  double beta = 1.0;
  double s = 0.0;
};

// Complete homogeneous symmetric polynomial h_t(alphas): the sum of
// alpha^{l} over all compositions l of t into size(alphas) nonnegative parts.
double homogeneous_sym(std::int64_t t, const AlphaVector& alphas);

// Throws DivergentParameters unless sum_t h_t(alphas) (t+beta)^{-s} converges
// under the guard used throughout: all weights in (0,1], beta > 0, and
// s > r whenever some weight equals 1.
void check_series_convergence(const AlphaVector& alphas,
                              const SeriesParams& params);

// M(beta) = sum_{t>=0} h_t(alphas) (t+beta)^{-s}, truncated so that the
// absolute error is certified below acc.abs_tol (and below abs_tol relative
// to the result when beta^s > 1).
double series_M(const AlphaVector& alphas, const SeriesParams& params,
                const SeriesAccuracy& acc = {});

// log(series_M), computed from the scaled series so that large beta and s do
// not underflow.
double log_series_M(const AlphaVector& alphas, const SeriesParams& params,
                    const SeriesAccuracy& acc = {});

// series_M evaluated at beta + shift.  Exactly equivalent to calling
// series_M with params.beta replaced by params.beta + shift.
double series_M_shifted(const AlphaVector& alphas, const SeriesParams& params,
                        std::int64_t shift, const SeriesAccuracy& acc = {});

// Certified upper bound on the tail sum_{t>T} h_t(alphas) (t+beta)^{-s}.
// Nonincreasing in T and valid for every T >= 0.
double series_tail_bound(const AlphaVector& alphas, const SeriesParams& params,
                         std::int64_t T);

// One series in a shared-truncation evaluation.  weights may contain zeros
// (entries must lie in [0, 1]); shift is added to the common beta; when
// log_weight is set each term carries an extra factor log(t + beta + shift).
struct SeriesSpec {
  std::vector<double> weights;
  double shift = 0.0;
  double s = 0.0;
  bool log_weight = false;
};

// Value of the series described by spec at offset beta, with certified
// absolute/relative truncation control as in series_M.
double series_value(const SeriesSpec& spec, double beta,
                    const SeriesAccuracy& acc = {});

// Ratio numerator/denominator of two series evaluated with one shared
// truncation index, so that structurally identical specs yield exactly 1.0.
// The certified bound on the ratio error is kept below acc.abs_tol.
double series_ratio(const SeriesSpec& numerator, const SeriesSpec& denominator,
                    double beta, const SeriesAccuracy& acc = {});

}  // namespace ugat

#endif
