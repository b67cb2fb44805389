#ifndef UGAT_FIT_HPP
#define UGAT_FIT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ugat/distribution.hpp"

namespace ugat {

struct Dataset {
  std::vector<CountVector> rows;
  std::string label;

  std::size_t size() const { return rows.size(); }
  std::size_t dimension() const {
    return rows.empty() ? 0 : rows.front().size();
  }
};

// Throws DegenerateData on an empty table, DimensionMismatch on ragged rows,
// and IndexOutOfRange on negative entries.
void validate_dataset(const Dataset& d);

struct FitConfig {
  bool estimate_s = true;
  double s_fixed = 0.0;
  double gradient_tol = 1e-6;    // infinity norm, unconstrained coordinates
  double objective_tol = 1e-10;  // relative objective change
  int max_iterations = 400;
  int multistart = 8;
  std::uint64_t seed = 1;
  SeriesAccuracy accuracy{};
};

struct ParameterEstimate {
  std::string name;
  double value = 0.0;
  double std_error = 0.0;  // NaN when the information matrix is unusable
  double ci_low = 0.0;     // 95% interval mapped through the
  double ci_high = 0.0;    // unconstrained parameterization
};

struct FitResult {
  std::vector<double> alpha;
  double beta = 1.0;
  double s = 0.0;
  bool s_estimated = true;
  double neg_loglik = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  // Covariance of (logit alpha_1..r, log beta[, s]) from the pseudo-inverse
  // of the observed information; empty when unusable.
  std::vector<std::vector<double>> covariance;
  std::vector<ParameterEstimate> estimates;
  bool converged = false;
  bool information_ill_conditioned = false;
  int iterations = 0;
  std::vector<double> start_objectives;
  int best_start = -1;

  std::size_t free_parameters() const {
    return alpha.size() + 1 + (s_estimated ? 1 : 0);
  }
  UgatParams params(const SeriesAccuracy& acc = {}) const;
};

// -log L(p; d) = -sum_j T_j log alpha_j + s sum_i log(m_i + beta)
//              + N log M, with T_j the column sums and m_i the row totals.
double neg_log_likelihood(const UgatParams& p, const Dataset& d);

// Gradient of log L in the natural parameters, ordered
// (alpha_1..alpha_r, beta, s); expectations use the kernel accuracy of p.
std::vector<double> score(const UgatParams& p, const Dataset& d);

FitResult fit_mle(const Dataset& d, const FitConfig& cfg = {});

struct InformationResult {
  std::vector<std::vector<double>> observed;    // negative Hessian of log L
  std::vector<std::vector<double>> covariance;  // pseudo-inverse
  bool ill_conditioned = false;
  double max_asymmetry = 0.0;  // before symmetrization
};

// Observed information in the unconstrained coordinates
// (logit alpha_1..r, log beta[, s]); central differences of the analytic
// score.  Evaluate at or near the optimum.
InformationResult observed_information(const UgatParams& p, const Dataset& d,
                                       bool include_s,
                                       const SeriesAccuracy& acc = {});

struct InformationCriteria {
  double aic = 0.0;
  double bic = 0.0;
};

InformationCriteria information_criteria(double neg_loglik,
                                         std::size_t free_parameters,
                                         std::size_t n_rows);

struct SGridResult {
  std::vector<double> grid;
  std::vector<double> profile_neg_loglik;
  FitResult best;
  bool refined = false;
};

// Fits with s held at each grid value, keeps the best profile point, and
// optionally continues from it with s free.
SGridResult fit_over_s_grid(const Dataset& d, const std::vector<double>& grid,
                            const FitConfig& cfg = {}, bool refine = false);

}  // namespace ugat

#endif
