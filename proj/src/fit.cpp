#include "ugat/fit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ugat/errors.hpp"

namespace ugat {
namespace {

constexpr double kPenalty = 1e12;
constexpr double kLogitLimit = 36.0;
constexpr double kLogBetaMin = -20.7;  // beta >= ~1e-9
constexpr double kLogBetaMax = 27.7;   // beta <= ~1e12
constexpr double kSLimit = 80.0;

struct Stats {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<double> column_sums;
  std::vector<double> row_totals;
  std::vector<double> column_means;
};

Stats collect_stats(const Dataset& d) {
  Stats st;
  st.n = d.size();
  st.r = d.dimension();
  st.column_sums.assign(st.r, 0.0);
  st.row_totals.reserve(st.n);
  for (const CountVector& row : d.rows) {
    double total = 0.0;
    for (std::size_t j = 0; j < st.r; ++j) {
      st.column_sums[j] += static_cast<double>(row[j]);
      total += static_cast<double>(row[j]);
    }
    st.row_totals.push_back(total);
  }
  st.column_means.resize(st.r);
  for (std::size_t j = 0; j < st.r; ++j) {
    st.column_means[j] = st.column_sums[j] / static_cast<double>(st.n);
  }
  return st;
}

double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

double sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }

double logit(double a) { return std::log(a) - std::log1p(-a); }

// Unconstrained coordinates: (logit alpha_1..r, log beta[, s]).
struct Transform {
  std::size_t r = 0;
  bool estimate_s = false;
  double s_fixed = 0.0;

  std::size_t dim() const { return r + 1 + (estimate_s ? 1 : 0); }

  void clamp_theta(std::vector<double>& theta) const {
    for (std::size_t j = 0; j < r; ++j) {
      theta[j] = clamp(theta[j], -kLogitLimit, kLogitLimit);
    }
    theta[r] = clamp(theta[r], kLogBetaMin, kLogBetaMax);
    if (estimate_s) theta[r + 1] = clamp(theta[r + 1], -kSLimit, kSLimit);
  }

  std::vector<double> alphas_of(const std::vector<double>& theta) const {
    std::vector<double> a(r);
    for (std::size_t j = 0; j < r; ++j) a[j] = sigmoid(theta[j]);
    return a;
  }
  double beta_of(const std::vector<double>& theta) const {
    return std::exp(theta[r]);
  }
  double s_of(const std::vector<double>& theta) const {
    return estimate_s ? theta[r + 1] : s_fixed;
  }

  std::vector<double> theta_of(const std::vector<double>& alpha, double beta,
                               double s) const {
    std::vector<double> theta(dim());
    for (std::size_t j = 0; j < r; ++j) theta[j] = logit(alpha[j]);
    theta[r] = std::log(beta);
    if (estimate_s) theta[r + 1] = s;
    return theta;
  }
};

// Negative log-likelihood from the sufficient statistics; one normalizer
// evaluation per call.
class Objective {
 public:
  Objective(const Stats& st, const Dataset& d, Transform tf,
            SeriesAccuracy acc)
      : st_(st), d_(d), tf_(std::move(tf)), acc_(acc) {}

  const Transform& transform() const { return tf_; }

  double value(const std::vector<double>& theta) const {
    try {
      UgatParams p = make_params(theta);
      double f = neg_log_likelihood_stats(p);
      return std::isfinite(f) ? f : kPenalty;
    } catch (const DivergentParameters&) {
      return kPenalty;
    } catch (const NonConvergent&) {
      return kPenalty;
    }
  }

  // Gradient of the negative log-likelihood in unconstrained coordinates.
  std::vector<double> gradient(const std::vector<double>& theta) const {
    UgatParams p = make_params(theta);
    std::vector<double> sc = score(p, d_);
    std::vector<double> g(tf_.dim());
    for (std::size_t j = 0; j < tf_.r; ++j) {
      double a = p.alphas()[j];
      g[j] = -sc[j] * a * (1.0 - a);
    }
    g[tf_.r] = -sc[tf_.r] * p.beta();
    if (tf_.estimate_s) g[tf_.r + 1] = -sc[tf_.r + 1];
    return g;
  }

  UgatParams make_params(const std::vector<double>& theta) const {
    return UgatParams(AlphaVector(tf_.alphas_of(theta)), tf_.beta_of(theta),
                      tf_.s_of(theta), acc_);
  }

  double neg_log_likelihood_stats(const UgatParams& p) const {
    double nll = 0.0;
    for (std::size_t j = 0; j < st_.r; ++j) {
      nll -= st_.column_sums[j] * std::log(p.alphas()[j]);
    }
    if (p.s() != 0.0) {
      double sum_log = 0.0;
      for (double m : st_.row_totals) sum_log += std::log(m + p.beta());
      nll += p.s() * sum_log;
    }
    nll += static_cast<double>(st_.n) * p.log_normalizer();
    return nll;
  }

 private:
  const Stats& st_;
  const Dataset& d_;
  Transform tf_;
  SeriesAccuracy acc_;
};

struct RunOutcome {
  std::vector<double> theta;
  double objective = kPenalty;
  double start_objective = kPenalty;
  bool converged = false;
  int iterations = 0;
};

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Derivative-free simplex polish used when the line search stalls.
void nelder_mead(const Objective& obj, std::vector<double>& theta, double& f,
                 int max_evals, int& evals_used) {
  const std::size_t p = theta.size();
  std::vector<std::vector<double>> pts(p + 1, theta);
  std::vector<double> vals(p + 1);
  vals[0] = f;
  for (std::size_t i = 0; i < p; ++i) {
    pts[i + 1][i] += 0.25 * std::max(1.0, std::abs(theta[i]));
    obj.transform().clamp_theta(pts[i + 1]);
    vals[i + 1] = obj.value(pts[i + 1]);
  }
  int evals = static_cast<int>(p);
  std::vector<std::size_t> order(p + 1);
  auto resort = [&] {
    for (std::size_t i = 0; i <= p; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  };
  auto point_at = [&](const std::vector<double>& centroid,
                      const std::vector<double>& worst, double coef) {
    std::vector<double> q(p);
    for (std::size_t i = 0; i < p; ++i) {
      q[i] = centroid[i] + coef * (centroid[i] - worst[i]);
    }
    obj.transform().clamp_theta(q);
    return q;
  };
  while (evals < max_evals) {
    resort();
    std::size_t best = order[0], worst = order[p], second = order[p - 1];
    if (vals[worst] - vals[best] <
        1e-12 * std::max(1.0, std::abs(vals[best]))) {
      break;
    }
    std::vector<double> centroid(p, 0.0);
    for (std::size_t k = 0; k <= p; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < p; ++i) centroid[i] += pts[k][i];
    }
    for (std::size_t i = 0; i < p; ++i) centroid[i] /= static_cast<double>(p);

    std::vector<double> refl = point_at(centroid, pts[worst], 1.0);
    double f_refl = obj.value(refl);
    ++evals;
    if (f_refl < vals[best]) {
      std::vector<double> exp_pt = point_at(centroid, pts[worst], 2.0);
      double f_exp = obj.value(exp_pt);
      ++evals;
      if (f_exp < f_refl) {
        pts[worst] = std::move(exp_pt);
        vals[worst] = f_exp;
      } else {
        pts[worst] = std::move(refl);
        vals[worst] = f_refl;
      }
    } else if (f_refl < vals[second]) {
      pts[worst] = std::move(refl);
      vals[worst] = f_refl;
    } else {
      std::vector<double> contr = point_at(centroid, pts[worst], -0.5);
      double f_contr = obj.value(contr);
      ++evals;
      if (f_contr < vals[worst]) {
        pts[worst] = std::move(contr);
        vals[worst] = f_contr;
      } else {
        for (std::size_t k = 0; k <= p; ++k) {
          if (k == best) continue;
          for (std::size_t i = 0; i < p; ++i) {
            pts[k][i] = pts[best][i] + 0.5 * (pts[k][i] - pts[best][i]);
          }
          vals[k] = obj.value(pts[k]);
          ++evals;
        }
      }
    }
  }
  resort();
  theta = pts[order[0]];
  f = vals[order[0]];
  evals_used = evals;
}

RunOutcome optimize_from(const Objective& obj, std::vector<double> theta,
                         const FitConfig& cfg) {
  const Transform& tf = obj.transform();
  const std::size_t p = tf.dim();
  tf.clamp_theta(theta);

  RunOutcome out;
  out.start_objective = obj.value(theta);
  double f = out.start_objective;
  if (f >= 0.5 * kPenalty) {
    out.theta = std::move(theta);
    out.objective = f;
    return out;
  }

  // The score needs slightly deeper certified truncations than the value, so
  // a point with a finite objective can still lack a usable gradient; such
  // points are treated as unacceptable rather than answered approximately.
  auto try_gradient = [&obj](const std::vector<double>& at,
                             std::vector<double>& g_out) {
    try {
      g_out = obj.gradient(at);
      return true;
    } catch (const NonConvergent&) {
      return false;
    } catch (const DivergentParameters&) {
      return false;
    }
  };

  std::vector<double> g;
  if (!try_gradient(theta, g)) {
    int evals = 0;
    nelder_mead(obj, theta, f, 200 * static_cast<int>(p), evals);
    out.theta = std::move(theta);
    out.objective = f;
    out.iterations = evals;
    out.converged = false;
    return out;
  }
  std::vector<std::vector<double>> H(p, std::vector<double>(p, 0.0));
  auto reset_H = [&] {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) H[i][j] = (i == j) ? 1.0 : 0.0;
    }
  };
  reset_H();

  bool line_search_stalled = false;
  int it = 0;
  bool h_is_identity = true;
  for (; it < cfg.max_iterations; ++it) {
    if (inf_norm(g) < cfg.gradient_tol) {
      out.converged = true;
      break;
    }
    std::vector<double> dir(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) dir[i] -= H[i][j] * g[j];
    }
    double slope = dot(g, dir);
    if (!(slope < 0.0)) {
      reset_H();
      h_is_identity = true;
      for (std::size_t i = 0; i < p; ++i) dir[i] = -g[i];
      slope = dot(g, dir);
    }

    double step = 1.0;
    std::vector<double> theta_new(p);
    std::vector<double> g_new;
    double f_new = kPenalty;
    bool accepted = false;
    for (int half = 0; half < 45; ++half) {
      for (std::size_t i = 0; i < p; ++i) {
        theta_new[i] = theta[i] + step * dir[i];
      }
      tf.clamp_theta(theta_new);
      f_new = obj.value(theta_new);
      if (f_new <= f + 1e-4 * step * slope &&
          try_gradient(theta_new, g_new)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!h_is_identity) {
        reset_H();
        h_is_identity = true;
        continue;
      }
      line_search_stalled = true;
      break;
    }
    std::vector<double> dtheta(p), y(p);
    for (std::size_t i = 0; i < p; ++i) {
      dtheta[i] = theta_new[i] - theta[i];
      y[i] = g_new[i] - g[i];
    }
    double df = f - f_new;
    bool tiny_change = df >= 0.0 && df < cfg.objective_tol *
                                              std::max(1.0, std::abs(f));
    theta = theta_new;
    f = f_new;
    g = std::move(g_new);
    if (tiny_change) {
      // Relative objective change below tolerance counts as converged.
      ++it;
      out.converged = true;
      break;
    }

    double sy = dot(dtheta, y);
    if (sy > 1e-10 * std::sqrt(dot(y, y)) * std::sqrt(dot(dtheta, dtheta))) {
      // Standard BFGS update of the inverse Hessian approximation.
      double rho = 1.0 / sy;
      std::vector<double> Hy(p, 0.0);
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) Hy[i] += H[i][j] * y[j];
      }
      double yHy = dot(y, Hy);
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
          H[i][j] += (1.0 + rho * yHy) * rho * dtheta[i] * dtheta[j] -
                     rho * (dtheta[i] * Hy[j] + Hy[i] * dtheta[j]);
        }
      }
      h_is_identity = false;
    }
  }

  if (line_search_stalled && !out.converged) {
    int evals = 0;
    nelder_mead(obj, theta, f, 200 * static_cast<int>(p), evals);
    it += evals;
    out.converged = try_gradient(theta, g) && inf_norm(g) < cfg.gradient_tol;
  }

  out.theta = std::move(theta);
  out.objective = f;
  out.iterations = it;
  return out;
}

// Deterministic multistart initial points: moment-matched alpha, a cycle of
// beta decades, a cycle of s values spanning both signs, and seeded jitter
// beyond the first four starts.
std::vector<std::vector<double>> build_starts(const Stats& st,
                                              const Transform& tf,
                                              const FitConfig& cfg) {
  static const double kDecades[] = {1.0, 10.0, 100.0, 1000.0};
  static const double kSCycle[] = {0.5, 2.0, -5.0, 8.0, -15.0, 1.0, -40.0,
                                   3.0};
  std::vector<double> alpha0(st.r);
  for (std::size_t j = 0; j < st.r; ++j) {
    alpha0[j] = clamp(st.column_means[j] / (1.0 + st.column_means[j]), 1e-4,
                      1.0 - 1e-4);
  }
  std::vector<std::vector<double>> starts;
  for (int k = 0; k < cfg.multistart; ++k) {
    double beta0 = kDecades[k % 4];
    double s0 = tf.estimate_s ? kSCycle[k % 8] : tf.s_fixed;
    std::vector<double> theta = tf.theta_of(alpha0, beta0, s0);
    if (k >= 4) {
      std::mt19937_64 rng(cfg.seed * 1000003ULL + static_cast<unsigned>(k));
      auto uniform = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
      };
      for (double& t : theta) t += (2.0 * uniform() - 1.0) * 0.3;
    }
    tf.clamp_theta(theta);
    starts.push_back(std::move(theta));
  }
  return starts;
}

void fill_estimates(FitResult& res, const Dataset& d,
                    const SeriesAccuracy& acc) {
  const std::size_t r = res.alpha.size();
  const std::size_t p = res.free_parameters();
  std::vector<double> se(p, std::numeric_limits<double>::quiet_NaN());
  try {
    UgatParams params = res.params(acc);
    InformationResult info =
        observed_information(params, d, res.s_estimated, acc);
    res.information_ill_conditioned = info.ill_conditioned;
    res.covariance = info.covariance;
    for (std::size_t i = 0; i < p; ++i) {
      double v = info.covariance[i][i];
      if (v > 0.0) se[i] = std::sqrt(v);
    }
  } catch (const std::exception&) {
    res.information_ill_conditioned = true;
    res.covariance.clear();
  }

  const double z = 1.959963984540054;
  res.estimates.clear();
  for (std::size_t j = 0; j < r; ++j) {
    ParameterEstimate e;
    e.name = "alpha" + std::to_string(j + 1);
    e.value = res.alpha[j];
    double u = logit(res.alpha[j]);
    e.std_error = se[j] * res.alpha[j] * (1.0 - res.alpha[j]);
    e.ci_low = sigmoid(u - z * se[j]);
    e.ci_high = sigmoid(u + z * se[j]);
    res.estimates.push_back(e);
  }
  {
    ParameterEstimate e;
    e.name = "beta";
    e.value = res.beta;
    e.std_error = se[r] * res.beta;
    e.ci_low = res.beta * std::exp(-z * se[r]);
    e.ci_high = res.beta * std::exp(z * se[r]);
    res.estimates.push_back(e);
  }
  if (res.s_estimated) {
    ParameterEstimate e;
    e.name = "s";
    e.value = res.s;
    e.std_error = se[r + 1];
    e.ci_low = res.s - z * se[r + 1];
    e.ci_high = res.s + z * se[r + 1];
    res.estimates.push_back(e);
  }
}

FitResult fit_with_starts(const Dataset& d, const FitConfig& cfg,
                          const std::vector<std::vector<double>>* extra_start) {
  validate_dataset(d);
  Stats st = collect_stats(d);
  for (std::size_t j = 0; j < st.r; ++j) {
    if (st.column_sums[j] == 0.0) {
      throw DegenerateData("column " + std::to_string(j + 1) +
                           " is identically zero; drop it before fitting");
    }
  }
  if (cfg.multistart < 1) throw DimensionMismatch("multistart must be >= 1");
  if (!(cfg.gradient_tol > 0.0) || !(cfg.objective_tol > 0.0)) {
    throw DimensionMismatch("tolerances must be positive");
  }

  Transform tf{st.r, cfg.estimate_s, cfg.s_fixed};
  if (st.n < tf.dim()) {
    throw DegenerateData("need at least as many rows as free parameters");
  }
  Objective obj(st, d, tf, cfg.accuracy);

  std::vector<std::vector<double>> starts = build_starts(st, tf, cfg);
  if (extra_start) {
    starts.insert(starts.end(), extra_start->begin(), extra_start->end());
  }

  FitResult res;
  res.s_estimated = cfg.estimate_s;
  std::vector<RunOutcome> runs;
  runs.reserve(starts.size());
  for (const std::vector<double>& theta0 : starts) {
    runs.push_back(optimize_from(obj, theta0, cfg));
    res.start_objectives.push_back(runs.back().start_objective);
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < runs.size(); ++k) {
    if (runs[k].objective < runs[best].objective) best = k;
  }
  const RunOutcome& win = runs[best];

  res.alpha = tf.alphas_of(win.theta);
  res.beta = tf.beta_of(win.theta);
  res.s = tf.s_of(win.theta);
  res.neg_loglik = win.objective;
  res.converged = win.converged;
  res.iterations = win.iterations;
  res.best_start = static_cast<int>(best);
  InformationCriteria ic =
      information_criteria(res.neg_loglik, res.free_parameters(), st.n);
  res.aic = ic.aic;
  res.bic = ic.bic;
  fill_estimates(res, d, cfg.accuracy);
  return res;
}

}  // namespace

void validate_dataset(const Dataset& d) {
  if (d.rows.empty()) throw DegenerateData("dataset has no rows");
  const std::size_t r = d.rows.front().size();
  if (r == 0) throw DimensionMismatch("rows must have at least one column");
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    if (d.rows[i].size() != r) {
      throw DimensionMismatch("row " + std::to_string(i + 1) +
                              " has a different dimension");
    }
    for (std::int64_t v : d.rows[i]) {
      if (v < 0) {
        throw IndexOutOfRange("row " + std::to_string(i + 1) +
                              " has a negative count");
      }
    }
  }
}

UgatParams FitResult::params(const SeriesAccuracy& acc) const {
  return UgatParams(AlphaVector(alpha), beta, s, acc);
}

double neg_log_likelihood(const UgatParams& p, const Dataset& d) {
  validate_dataset(d);
  if (d.dimension() != p.dimension()) {
    throw DimensionMismatch("data dimension does not match the parameters");
  }
  Stats st = collect_stats(d);
  Transform tf{st.r, true, 0.0};
  Objective obj(st, d, tf, p.accuracy());
  return obj.neg_log_likelihood_stats(p);
}

std::vector<double> score(const UgatParams& p, const Dataset& d) {
  validate_dataset(d);
  if (d.dimension() != p.dimension()) {
    throw DimensionMismatch("data dimension does not match the parameters");
  }
  Stats st = collect_stats(d);
  const double n = static_cast<double>(st.n);
  std::vector<double> sc(st.r + 2, 0.0);
  for (std::size_t j = 0; j < st.r; ++j) {
    double mean_j = raw_moment(p, j, 1);
    sc[j] = (st.column_sums[j] - n * mean_j) / p.alphas()[j];
  }
  const std::vector<double>& w = p.alphas().values();
  if (p.s() != 0.0) {
    double sum_inv = 0.0;
    for (double m : st.row_totals) sum_inv += 1.0 / (m + p.beta());
    SeriesSpec num{w, 0.0, p.s() + 1.0, false};
    SeriesSpec den{w, 0.0, p.s(), false};
    double mean_inv = series_ratio(num, den, p.beta(), p.accuracy());
    sc[st.r] = -p.s() * sum_inv + n * p.s() * mean_inv;
  }
  {
    double sum_log = 0.0;
    for (double m : st.row_totals) sum_log += std::log(m + p.beta());
    SeriesSpec num{w, 0.0, p.s(), true};
    SeriesSpec den{w, 0.0, p.s(), false};
    double mean_log = series_ratio(num, den, p.beta(), p.accuracy());
    sc[st.r + 1] = -sum_log + n * mean_log;
  }
  return sc;
}

FitResult fit_mle(const Dataset& d, const FitConfig& cfg) {
  return fit_with_starts(d, cfg, nullptr);
}

InformationResult observed_information(const UgatParams& p, const Dataset& d,
                                       bool include_s,
                                       const SeriesAccuracy& acc) {
  validate_dataset(d);
  if (d.dimension() != p.dimension()) {
    throw DimensionMismatch("data dimension does not match the parameters");
  }
  Stats st = collect_stats(d);
  Transform tf{st.r, include_s, p.s()};
  Objective obj(st, d, tf, acc);
  std::vector<double> theta =
      tf.theta_of(p.alphas().values(), p.beta(), p.s());
  const std::size_t m = tf.dim();

  Eigen::MatrixXd raw(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    double h = 1e-4 * std::max(1.0, std::abs(theta[i]));
    std::vector<double> up = theta, dn = theta;
    up[i] += h;
    dn[i] -= h;
    std::vector<double> g_up = obj.gradient(up);
    std::vector<double> g_dn = obj.gradient(dn);
    for (std::size_t j = 0; j < m; ++j) {
      raw(static_cast<int>(i), static_cast<int>(j)) =
          (g_up[j] - g_dn[j]) / (2.0 * h);
    }
  }

  InformationResult out;
  out.max_asymmetry = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  Eigen::MatrixXd sym = 0.5 * (raw + raw.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  double lambda_max = lambda.cwiseAbs().maxCoeff();
  double cut = 1e-10 * std::max(lambda_max, 1e-300);
  Eigen::VectorXd inv(lambda.size());
  for (int i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > cut) {
      inv(i) = 1.0 / lambda(i);
    } else {
      inv(i) = 0.0;
      out.ill_conditioned = true;
    }
  }
  double min_pos = std::numeric_limits<double>::infinity();
  for (int i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > cut) min_pos = std::min(min_pos, lambda(i));
  }
  if (std::isfinite(min_pos) && lambda_max / min_pos > 1e8) {
    out.ill_conditioned = true;
  }
  Eigen::MatrixXd cov =
      eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();

  out.observed.assign(m, std::vector<double>(m));
  out.covariance.assign(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out.observed[i][j] = sym(static_cast<int>(i), static_cast<int>(j));
      out.covariance[i][j] = cov(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

InformationCriteria information_criteria(double neg_loglik,
                                         std::size_t free_parameters,
                                         std::size_t n_rows) {
  if (n_rows < 1) throw DegenerateData("need at least one row");
  InformationCriteria ic;
  double p = static_cast<double>(free_parameters);
  ic.aic = 2.0 * p + 2.0 * neg_loglik;
  ic.bic = p * std::log(static_cast<double>(n_rows)) + 2.0 * neg_loglik;
  return ic;
}

SGridResult fit_over_s_grid(const Dataset& d, const std::vector<double>& grid,
                            const FitConfig& cfg, bool refine) {
  if (grid.empty()) throw DimensionMismatch("empty s grid");
  SGridResult out;
  out.grid = grid;
  bool have_best = false;
  for (double s : grid) {
    FitConfig fixed = cfg;
    fixed.estimate_s = false;
    fixed.s_fixed = s;
    FitResult res = fit_mle(d, fixed);
    out.profile_neg_loglik.push_back(res.neg_loglik);
    if (!have_best || res.neg_loglik < out.best.neg_loglik) {
      out.best = res;
      have_best = true;
    }
  }
  if (refine) {
    Transform tf{out.best.alpha.size(), true, 0.0};
    std::vector<std::vector<double>> extra = {
        tf.theta_of(out.best.alpha, out.best.beta, out.best.s)};
    FitConfig free_cfg = cfg;
    free_cfg.estimate_s = true;
    FitResult refined = fit_with_starts(d, free_cfg, &extra);
    if (refined.neg_loglik <= out.best.neg_loglik) {
      out.best = refined;
      out.refined = true;
    }
  }
  return out;
}

}  // namespace ugat
