#ifndef UGAT_DISTRIBUTION_HPP
#define UGAT_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

#include "ugat/series.hpp"

namespace ugat {

// One observation: a vector of r nonnegative counts.
using CountVector = std::vector<std::int64_t>;

// Parameter set of the multivariate count distribution with joint pmf
// proportional to prod_i alpha_i^{x_i} / (x_1 + ... + x_r + beta)^s on the
// full nonnegative lattice.  Positive s thins large totals, s = 0 factorizes
// into independent geometrics, and negative s (allowed while every alpha is
// below one) tilts mass toward larger totals.  The normalizer is evaluated
// once on construction with the supplied accuracy budget.
class UgatParams {
 public:
  UgatParams(AlphaVector alphas, double beta, double s,
             SeriesAccuracy accuracy = {});

  std::size_t dimension() const { return alphas_.size(); }
  const AlphaVector& alphas() const { return alphas_; }
  double beta() const { return beta_; }
  double s() const { return s_; }
  const SeriesAccuracy& accuracy() const { return accuracy_; }

  // Bare normalizing series M(beta) = sum_t h_t(alpha) (t + beta)^{-s} and
  // its logarithm (safe when M underflows a double).
  double normalizer() const;
  double log_normalizer() const { return log_normalizer_; }

 private:
  AlphaVector alphas_;
  double beta_;
  double s_;
  SeriesAccuracy accuracy_;
  double log_normalizer_;
};

double joint_pmf(const UgatParams& p, const CountVector& x);
double log_joint_pmf(const UgatParams& p, const CountVector& x);

// P(X_i = x), P(X_i <= x), P(X_i > x).  The survivor form is the primitive:
// P(X_i > x) = alpha_i^{x+1} M(beta + x + 1) / M(beta); the pmf is defined
// as the difference of adjacent survivor values so that the telescoping
// identity holds exactly.  x below the support gives ccdf 1, cdf 0, pmf 0.
double marginal_pmf(const UgatParams& p, std::size_t i, std::int64_t x);
double marginal_cdf(const UgatParams& p, std::size_t i, std::int64_t x);
double marginal_ccdf(const UgatParams& p, std::size_t i, std::int64_t x);

// Product of marginal CDFs: exact for s = 0, an approximation otherwise.
double joint_cdf_product(const UgatParams& p, const CountVector& x);

// Exact P(X <= x) by summing the joint pmf over the box; throws BoxTooLarge
// when the box holds more than max_cells lattice points.
double joint_cdf_exact(const UgatParams& p, const CountVector& x,
                       std::int64_t max_cells = 1000000);

// Bivariate conditionals (dimension must be exactly 2; i and j name the two
// distinct coordinates).
double conditional_pmf(const UgatParams& p, std::size_t i, std::int64_t xi,
                       std::size_t j, std::int64_t xj);
double conditional_expectation(const UgatParams& p, std::size_t i,
                               std::size_t j, std::int64_t xj);

// E[X_i^ell] and E[X_i (X_i - 1) ... (X_i - ell + 1)] for ell >= 1.  With
// alpha_i = 1 the certified truncation needs s > ell + 1 in one dimension
// and s > r + ell + 1 otherwise.
double raw_moment(const UgatParams& p, std::size_t i, int ell);
double factorial_moment(const UgatParams& p, std::size_t i, int ell);

// Signed Stirling numbers of the first kind s(n, k), tabulated for
// 0 <= k <= n <= 20; they convert raw moments into factorial moments.
std::int64_t stirling_first(int n, int k);

// E[prod_i t_i^{X_i}] for t_i >= 0 with every t_i alpha_i <= 1, and
// E[exp(sum_i t_i X_i)] for exp(t_i) alpha_i <= 1.
double pgf(const UgatParams& p, const std::vector<double>& t);
double mgf(const UgatParams& p, const std::vector<double>& t);

// Draws n vectors by inverse-CDF sampling of the total followed by the exact
// conditional split across coordinates.  Deterministic for a fixed seed.
std::vector<CountVector> sample(const UgatParams& p, std::int64_t n,
                                std::uint64_t seed);

}  // namespace ugat

#endif
