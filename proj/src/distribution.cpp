#include "ugat/distribution.hpp"

#include <algorithm>
#include <array>
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

void check_coordinate(const UgatParams& p, std::size_t i) {
  if (i >= p.dimension())
    throw IndexOutOfRange("coordinate index out of range");
}

void check_point(const UgatParams& p, const CountVector& x) {
  if (x.size() != p.dimension())
    throw DimensionMismatch(
        "count vector dimension does not match the parameter dimension");
  for (std::int64_t v : x)
    if (v < 0) throw IndexOutOfRange("count entries must be nonnegative");
}

std::int64_t total_of(const CountVector& x) {
  std::int64_t m = 0;
  for (std::int64_t v : x) m += v;
  return m;
}

// M(beta + shift) / M(beta) under one shared truncation index; shift = 0
// returns exactly 1.
double shifted_ratio(const UgatParams& p, double shift) {
  SeriesSpec num{p.alphas().values(), shift, p.s(), false};
  SeriesSpec den{p.alphas().values(), 0.0, p.s(), false};
  return series_ratio(num, den, p.beta(), p.accuracy());
}

double survivor(const UgatParams& p, std::size_t i, std::int64_t x) {
  if (x < 0) return 1.0;
  double shift = static_cast<double>(x) + 1.0;
  return std::pow(p.alphas()[i], shift) * shifted_ratio(p, shift);
}

double factorial_of(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

UgatParams::UgatParams(AlphaVector alphas, double beta, double s,
                       SeriesAccuracy accuracy)
    : alphas_(std::move(alphas)),
      beta_(beta),
      s_(s),
      accuracy_(accuracy),
      log_normalizer_(0.0) {
  check_series_convergence(alphas_, SeriesParams{beta_, s_});
  log_normalizer_ =
      log_series_M(alphas_, SeriesParams{beta_, s_}, accuracy_);
}

double UgatParams::normalizer() const { return std::exp(log_normalizer_); }

double log_joint_pmf(const UgatParams& p, const CountVector& x) {
  check_point(p, x);
  double acc = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j)
    acc += static_cast<double>(x[j]) * std::log(p.alphas()[j]);
  double m = static_cast<double>(total_of(x));
  acc -= p.s() * std::log(m + p.beta());
  return acc - p.log_normalizer();
}

double joint_pmf(const UgatParams& p, const CountVector& x) {
  return std::exp(log_joint_pmf(p, x));
}

double marginal_ccdf(const UgatParams& p, std::size_t i, std::int64_t x) {
  check_coordinate(p, i);
  return survivor(p, i, x);
}

double marginal_cdf(const UgatParams& p, std::size_t i, std::int64_t x) {
  check_coordinate(p, i);
  return 1.0 - survivor(p, i, x);
}

double marginal_pmf(const UgatParams& p, std::size_t i, std::int64_t x) {
  check_coordinate(p, i);
  if (x < 0) return 0.0;
  return survivor(p, i, x - 1) - survivor(p, i, x);
}

double joint_cdf_product(const UgatParams& p, const CountVector& x) {
  if (x.size() != p.dimension())
    throw DimensionMismatch(
        "count vector dimension does not match the parameter dimension");
  double acc = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    acc *= 1.0 - survivor(p, i, x[i]);
  return acc;
}

double joint_cdf_exact(const UgatParams& p, const CountVector& x,
                       std::int64_t max_cells) {
  if (x.size() != p.dimension())
    throw DimensionMismatch(
        "count vector dimension does not match the parameter dimension");
  for (std::int64_t v : x)
    if (v < 0) return 0.0;
  double cells = 1.0;
  for (std::int64_t v : x) cells *= static_cast<double>(v) + 1.0;
  if (cells > static_cast<double>(max_cells))
    throw BoxTooLarge("joint_cdf_exact box exceeds max_cells lattice points");
  CountVector point(x.size(), 0);
  double acc = 0.0;
  while (true) {
    acc += joint_pmf(p, point);
    std::size_t j = 0;
    while (j < point.size() && point[j] == x[j]) {
      point[j] = 0;
      ++j;
    }
    if (j == point.size()) break;
    ++point[j];
  }
  return acc;
}

double conditional_pmf(const UgatParams& p, std::size_t i, std::int64_t xi,
                       std::size_t j, std::int64_t xj) {
  if (p.dimension() != 2)
    throw DimensionMismatch("conditionals require dimension exactly 2");
  check_coordinate(p, i);
  check_coordinate(p, j);
  if (i == j) throw IndexOutOfRange("conditional coordinates must differ");
  if (xi < 0 || xj < 0)
    throw IndexOutOfRange("count entries must be nonnegative");
  CountVector x(2, 0);
  x[i] = xi;
  x[j] = xj;
  return joint_pmf(p, x) / marginal_pmf(p, j, xj);
}

double conditional_expectation(const UgatParams& p, std::size_t i,
                               std::size_t j, std::int64_t xj) {
  if (p.dimension() != 2)
    throw DimensionMismatch("conditionals require dimension exactly 2");
  check_coordinate(p, i);
  check_coordinate(p, j);
  if (i == j) throw IndexOutOfRange("conditional coordinates must differ");
  if (xj < 0) throw IndexOutOfRange("count entries must be nonnegative");

  // Given X_j = xj the other coordinate follows a one-dimensional law with
  // weight a and offset c: P(v) proportional to a^v (v + c)^{-s}.
  double a = p.alphas()[i];
  double c = p.beta() + static_cast<double>(xj);
  double s = p.s();
  const SeriesAccuracy& acc = p.accuracy();

  auto wf = [&](double v) { return std::exp(-s * std::log1p(v / c)); };
  double den = wf(0.0);
  double num = 0.0;
  double apow = 1.0;
  for (std::int64_t t = 1; t <= acc.max_terms; ++t) {
    double td = static_cast<double>(t);
    apow *= a;
    double base = apow * wf(td);
    den += base;
    num += td * base;

    double etail_num;
    double etail_den;
    if (a < 1.0) {
      double growth = s < 0.0 ? std::pow((td + 1.0 + c) / (td + c), -s) : 1.0;
      double rho_den = a * growth;
      double rho_num = a * growth * (td + 2.0) / (td + 1.0);
      if (!(rho_num < 1.0)) continue;
      double head = apow * a * wf(td + 1.0);
      etail_den = head / (1.0 - rho_den);
      etail_num = (td + 1.0) * head / (1.0 - rho_num);
    } else {
      double u = td + 1.0 + c;
      double head = wf(td + 1.0);
      etail_den = head * (1.0 + u / (s - 1.0));
      etail_num = head * u * (1.0 + u / (s - 2.0));
    }
    double den_low = den - etail_den;
    if (!(den_low > 0.0)) continue;
    double mean = num / den;
    double err = (etail_num + mean * etail_den) / den_low;
    if (err <= acc.abs_tol * std::max(1.0, mean) ||
        (etail_num <= 4e-16 * num && etail_den <= 4e-16 * den))
      return mean;
  }
  throw NonConvergent(
      "conditional expectation tail not certified within max_terms");
}

namespace {

// Certified upper bound on sum_{v >= 1} v^ell a^v for a < 1.
double poly_geometric_upper(double a, int ell, std::int64_t max_terms) {
  double eld = static_cast<double>(ell);
  double sum = 0.0;
  double apow = 1.0;
  for (std::int64_t v = 1; v <= max_terms; ++v) {
    double vd = static_cast<double>(v);
    apow *= a;
    sum += std::pow(vd, eld) * apow;
    double rho = a * std::pow((vd + 2.0) / (vd + 1.0), eld);
    if (!(rho < 1.0)) continue;
    double tail = std::pow(vd + 1.0, eld) * apow * a / (1.0 - rho);
    if (tail <= 1e-12 * std::max(1.0, sum)) return sum + tail;
  }
  throw NonConvergent("polynomial geometric sum did not stabilize");
}

}  // namespace

// Moments are summed over the total m: the inner split of m across the
// coordinates is an exact finite sum, so only one tail needs certifying.
double raw_moment(const UgatParams& p, std::size_t i, int ell) {
  check_coordinate(p, i);
  if (ell < 1) throw IndexOutOfRange("moment order must be at least 1");
  const AlphaVector& alpha = p.alphas();
  double ai = alpha[i];
  double q = alpha.max_value();
  double s = p.s();
  double c = p.beta();
  int r = static_cast<int>(p.dimension());
  double rd = static_cast<double>(r);
  double eld = static_cast<double>(ell);
  const SeriesAccuracy& acc = p.accuracy();

  if (ai == 1.0 && !(s > eld + rd))
    throw NonConvergent(
        "moment tail cannot be certified: a unit weight coordinate needs "
        "s > ell + dimension");

  // scaled normalizer: M(beta) = beta^{-s} * m_scaled, m_scaled >= 1
  double m_scaled = std::exp(p.log_normalizer() + s * std::log(c));
  auto wf = [&](double m) { return std::exp(-s * std::log1p(m / c)); };

  std::vector<double> others;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    if (j != i) others.push_back(alpha[j]);
  std::vector<double> g(others.size(), 1.0);

  // q == 1 with alpha_i < 1 keeps a convergent coordinate sum out front
  double s_ell =
      (q == 1.0 && ai < 1.0) ? poly_geometric_upper(ai, ell, acc.max_terms)
                             : 0.0;

  // Pascal rows for the moment recurrence
  //   N_k(m) = alpha_i * sum_j binom(k, j) N_j(m - 1),   N_0 = h_m(alpha)
  std::vector<std::vector<double>> binom_rows(ell + 1);
  for (int k = 0; k <= ell; ++k) {
    binom_rows[k].assign(k + 1, 1.0);
    for (int j = 1; j < k; ++j)
      binom_rows[k][j] = binom_rows[k - 1][j - 1] + binom_rows[k - 1][j];
  }
  std::vector<double> moment_state(ell + 1, 0.0);
  moment_state[0] = 1.0;

  double sum = 0.0;
  double binom_full = 1.0;  // binom(m + r - 1, r - 1)
  double qpow = 1.0;
  for (std::int64_t m = 1; m <= acc.max_terms; ++m) {
    double md = static_cast<double>(m);
    double h_m = 0.0;
    if (!others.empty()) {
      g[0] *= others[0];
      for (std::size_t j = 1; j < g.size(); ++j)
        g[j] = g[j - 1] + others[j] * g[j];
      h_m = g.back();
    }
    std::vector<double> prev = moment_state;
    for (int k = ell; k >= 1; --k) {
      double acc_k = 0.0;
      for (int j = 0; j <= k; ++j) acc_k += binom_rows[k][j] * prev[j];
      moment_state[k] = ai * acc_k;
    }
    moment_state[0] = h_m + ai * prev[0];
    double nm = moment_state[ell];
    binom_full *= (md - 1.0 + rd) / md;
    qpow *= q;
    sum += nm * wf(md);

    double u = md + 1.0 + c;
    double tail = std::numeric_limits<double>::infinity();
    if (q < 1.0) {
      double growth = s < 0.0 ? std::pow((u + 1.0) / u, -s) : 1.0;
      double rho = q * growth * std::pow((md + 2.0) / (md + 1.0), eld) *
                   ((md + 1.0 + rd) / (md + 2.0));
      if (rho < 1.0) {
        double binom_next = binom_full * (md + rd) / (md + 1.0);
        tail = std::pow(md + 1.0, eld) * binom_next * qpow * q *
               wf(md + 1.0) / (1.0 - rho);
      }
    }
    if (q == 1.0 && ai < 1.0) {
      double kappa = std::max(1.0, std::pow((rd - 2.0) / u, rd - 2.0));
      tail = std::min(tail, s_ell * kappa / factorial_of(r - 2) *
                                wf(md + 1.0) * std::pow(u, rd - 2.0) *
                                (1.0 + u / (s - rd + 1.0)));
    }
    if (s > eld + rd) {
      // Power-law comparison; q^m <= 1 makes it valid for every q, and near
      // q = 1 it certifies long before the geometric envelope contracts.
      double kappa = std::max(1.0, std::pow((rd - 1.0) / u, rd - 1.0));
      tail = std::min(tail, kappa / factorial_of(r - 1) * wf(md + 1.0) *
                                std::pow(u, eld + rd - 1.0) *
                                (1.0 + u / (s - eld - rd)));
    }
    if (std::isinf(tail)) continue;
    double err = tail / m_scaled;
    double val = sum / m_scaled;
    if (err <= acc.abs_tol * std::max(1.0, val) || err <= 4e-16 * val)
      return val;
  }
  throw NonConvergent("moment tail not certified within max_terms");
}

double factorial_moment(const UgatParams& p, std::size_t i, int ell) {
  check_coordinate(p, i);
  if (ell < 1) throw IndexOutOfRange("moment order must be at least 1");
  if (ell > 20)
    throw OutOfTabulatedRange(
        "factorial moments are supported up to order 20");
  double acc = 0.0;
  for (int k = 1; k <= ell; ++k) {
    double mk = raw_moment(p, i, k);
    acc += static_cast<double>(stirling_first(ell, k)) * mk;
  }
  return acc;
}

std::int64_t stirling_first(int n, int k) {
  constexpr int kMax = 20;
  if (n < 0 || n > kMax)
    throw OutOfTabulatedRange("stirling_first is tabulated for 0 <= n <= 20");
  if (k < 0 || k > n)
    throw OutOfTabulatedRange("stirling_first requires 0 <= k <= n");
  static const auto table = [] {
    std::array<std::array<std::int64_t, kMax + 1>, kMax + 1> t{};
    t[0][0] = 1;
    for (int m = 1; m <= kMax; ++m) {
      for (int j = 1; j <= m; ++j)
        t[m][j] = t[m - 1][j - 1] -
                  static_cast<std::int64_t>(m - 1) * t[m - 1][j];
    }
    return t;
  }();
  return table[n][k];
}

namespace {

double weighted_series_ratio(const UgatParams& p, std::vector<double> w) {
  SeriesSpec num{std::move(w), 0.0, p.s(), false};
  SeriesSpec den{p.alphas().values(), 0.0, p.s(), false};
  return series_ratio(num, den, p.beta(), p.accuracy());
}

}  // namespace

double pgf(const UgatParams& p, const std::vector<double>& t) {
  if (t.size() != p.dimension())
    throw DimensionMismatch("pgf argument dimension mismatch");
  std::vector<double> w(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] >= 0.0))
      throw DivergentParameters("pgf arguments must be nonnegative");
    w[i] = t[i] * p.alphas()[i];
    if (w[i] > 1.0)
      throw DivergentParameters(
          "pgf argument lies outside the convergence radius");
  }
  return weighted_series_ratio(p, std::move(w));
}

double mgf(const UgatParams& p, const std::vector<double>& t) {
  if (t.size() != p.dimension())
    throw DimensionMismatch("mgf argument dimension mismatch");
  std::vector<double> w(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    w[i] = std::exp(t[i]) * p.alphas()[i];
    if (w[i] > 1.0)
      throw DivergentParameters(
          "mgf argument lies outside the convergence radius");
  }
  return weighted_series_ratio(p, std::move(w));
}

namespace {

// Lazily grown tables for two-stage sampling: suffix[j][m] holds the
// homogeneous polynomial h_m over weights j..r-1, so suffix[0] describes the
// distribution of the total and later rows drive the coordinate split.
struct SamplerTables {
  const UgatParams& p;
  int r;
  double beta;
  double s;
  std::vector<std::vector<double>> suffix;
  std::vector<double> cum;  // cumulative scaled kernel mass of the total

  explicit SamplerTables(const UgatParams& params)
      : p(params),
        r(static_cast<int>(params.dimension())),
        beta(params.beta()),
        s(params.s()),
        suffix(params.dimension()) {
    for (auto& row : suffix) row.push_back(1.0);
    cum.push_back(1.0);  // t = 0 term of the scaled series
  }

  double weight_factor(std::int64_t t) const {
    return std::exp(-s * std::log1p(static_cast<double>(t) / beta));
  }

  void grow_to(std::int64_t t_max) {
    for (std::int64_t m = static_cast<std::int64_t>(cum.size()); m <= t_max;
         ++m) {
      const auto& alpha = p.alphas();
      suffix[r - 1].push_back(suffix[r - 1].back() * alpha[r - 1]);
      for (int j = r - 2; j >= 0; --j)
        suffix[j].push_back(suffix[j + 1][m] + alpha[j] * suffix[j][m - 1]);
      cum.push_back(cum.back() + suffix[0][m] * weight_factor(m));
    }
  }
};

}  // namespace

std::vector<CountVector> sample(const UgatParams& p, std::int64_t n,
                                std::uint64_t seed) {
  if (n < 0) throw IndexOutOfRange("sample count must be nonnegative");
  std::mt19937_64 rng(seed);
  auto next_uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  // Total scaled mass, including any tail correction, from the cached
  // normalizer: M(beta) = beta^{-s} * scaled_total.
  double scaled_total =
      std::exp(p.log_normalizer() + p.s() * std::log(p.beta()));

  SamplerTables tables(p);
  int r = static_cast<int>(p.dimension());
  std::vector<CountVector> out;
  out.reserve(static_cast<std::size_t>(n));

  for (std::int64_t k = 0; k < n; ++k) {
    double target = next_uniform() * scaled_total;
    std::int64_t total = 0;
    while (true) {
      std::int64_t known = static_cast<std::int64_t>(tables.cum.size()) - 1;
      auto it =
          std::lower_bound(tables.cum.begin(), tables.cum.end(), target);
      if (it != tables.cum.end()) {
        total = static_cast<std::int64_t>(it - tables.cum.begin());
        break;
      }
      if (known >= p.accuracy().max_terms)
        throw NonConvergent(
            "sampled total exceeded the series term budget");
      tables.grow_to(std::min<std::int64_t>(known * 2 + 16,
                                            p.accuracy().max_terms));
    }

    CountVector x(p.dimension(), 0);
    std::int64_t rem = total;
    for (int j = 0; j + 1 < r; ++j) {
      if (rem == 0) break;
      double u = next_uniform() * tables.suffix[j][rem];
      double acc = 0.0;
      double apow = 1.0;
      std::int64_t a = 0;
      for (; a < rem; ++a) {
        acc += apow * tables.suffix[j + 1][rem - a];
        if (acc >= u) break;
        apow *= p.alphas()[j];
      }
      x[j] = a;
      rem -= a;
    }
    x[r - 1] = rem;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace ugat
