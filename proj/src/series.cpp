#include "ugat/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ugat/errors.hpp"

namespace ugat {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Once the certified tail drops below this fraction of the accumulated sum,
// further terms cannot change the stored double and summation stops.
constexpr double kRelFloor = 4e-16;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

// One series advanced term by term under a truncation index shared across
// all series of an evaluation.  partial accumulates the scaled series
// sum_t h_t(w) (1 + t/c)^{-s} [* log(t + c)], whose unscaled value is c^{-s}
// times larger; scaling keeps the running sum near 1 even when c^{-s}
// underflows.
struct SeriesState {
  std::vector<double> w;
  double c = 1.0;
  double s = 0.0;
  bool logw = false;
  double q = 0.0;
  int r = 0;

  std::vector<double> h;  // prefix values h_t(w_0..w_j)
  double binom = 1.0;     // C(t + r - 1, r - 1)
  double qpow = 1.0;      // q^t
  double partial = 0.0;

  void init(const SeriesSpec& spec, double beta) {
    w = spec.weights;
    if (w.empty()) throw DimensionMismatch("series weights must be non-empty");
    r = static_cast<int>(w.size());
    c = beta + spec.shift;
    s = spec.s;
    logw = spec.log_weight;
    for (double v : w) {
      if (!(v >= 0.0 && v <= 1.0))
        throw DivergentParameters("series weights must lie in [0, 1]");
    }
    if (!(c > 0.0))
      throw DivergentParameters("series offset beta + shift must be positive");
    if (std::isnan(s)) throw DivergentParameters("series exponent s is NaN");
    q = *std::max_element(w.begin(), w.end());
    if (q == 1.0 && !(s > static_cast<double>(r)))
      throw DivergentParameters(
          "series with a unit weight requires s > the number of weights");
    h.assign(w.size(), 1.0);
    binom = 1.0;
    qpow = 1.0;
    partial = weight_factor(0);
  }

  double weight_factor(std::int64_t t) const {
    double f = std::exp(-s * std::log1p(static_cast<double>(t) / c));
    if (logw) f *= std::log(static_cast<double>(t) + c);
    return f;
  }

  // Advances from index t - 1 to t and accumulates the new term.  The prefix
  // recurrence updates in place: h[j] <- h[j-1]_new + w[j] * h[j]_old.
  void advance(std::int64_t t) {
    h[0] *= w[0];
    for (std::size_t j = 1; j < h.size(); ++j) h[j] = h[j - 1] + w[j] * h[j];
    binom *= static_cast<double>(t - 1 + r) / static_cast<double>(t);
    qpow *= q;
    partial += h.back() * weight_factor(t);
  }

  bool midpoint_path() const { return q == 1.0 && r == 1 && !logw; }

  // Integral estimate of the scaled tail beyond index t, added to the value
  // on the midpoint path (unit weight, one dimension).  The estimate always
  // overshoots the true tail, so it also serves as an upper bound.
  double tail_correction(std::int64_t t) const {
    if (!midpoint_path()) return 0.0;
    double mid = static_cast<double>(t) + 0.5;
    return c * std::exp(-(s - 1.0) * std::log1p(mid / c)) / (s - 1.0);
  }

  // Certified bound on |true scaled tail - tail_correction| beyond index t.
  double tail_err(std::int64_t t) const {
    double td = static_cast<double>(t);
    if (q == 0.0) return 0.0;
    if (midpoint_path()) {
      // Midpoint-rule remainder for sum_{u>t} (u + c)^{-s}, scaled by c^s.
      double mid = static_cast<double>(t) + 0.5;
      double v = mid + c;
      double wf = std::exp(-s * std::log1p(mid / c));
      return (s * (s + 1.0) / 24.0) * wf *
             (1.0 / (v * v) + 1.0 / (v * (s + 1.0)));
    }
    double bound = kInf;
    if (q < 1.0) {
      // Geometric envelope C(t + r - 1, r - 1) q^t majorizes h_t; successive
      // envelope term ratios stay below rho.
      double a =
          binom * (td + r) / (td + 1.0) * qpow * q * weight_factor(t + 1);
      double rho = q * (td + 1.0 + r) / (td + 2.0);
      if (s < 0.0) rho *= std::pow((td + 2.0 + c) / (td + 1.0 + c), -s);
      if (logw) rho *= std::log(td + 2.0 + c) / std::log(td + 1.0 + c);
      if (rho < 1.0) bound = a / (1.0 - rho);
    }
    // Power-law comparison with the integral of u^{r-1-s}, folding
    // log(u + c) <= (u + c)^delta / delta.  q^v <= 1 makes this valid for
    // every q, and near q = 1 it is far tighter than the geometric envelope.
    double sr = static_cast<double>(r);
    double delta = logw ? std::min(1.0, (s - sr) / 2.0) : 0.0;
    if (s - sr - delta > 0.0) {
      double u = td + 1.0 + c;
      double lead = std::exp(-s * std::log1p((td + 1.0) / c));
      if (r > 1) {
        double g = (td + sr) / u;
        lead *= std::max(1.0, std::pow(g, sr - 1.0));
        lead *= std::pow(u, sr - 1.0) / factorial(r - 1);
      }
      if (logw) lead *= std::pow(u, delta) / delta;
      bound = std::min(bound, lead * (1.0 + u / (s - sr - delta)));
    }
    return bound;
  }

  // Upper bound on the true scaled tail beyond index t.
  double tail_upper_bound(std::int64_t t) const {
    return midpoint_path() ? tail_correction(t) : tail_err(t);
  }
};

// Advances all states in lockstep until pred(t) is satisfied; pred is probed
// at every index so structurally identical inputs stop at the same index.
template <class Pred>
void run_shared(std::vector<SeriesState>& states, std::int64_t max_terms,
                Pred pred) {
  if (pred(0)) return;
  for (std::int64_t t = 1; t <= max_terms; ++t) {
    for (auto& st : states) st.advance(t);
    if (pred(t)) return;
  }
  throw NonConvergent(
      "series truncation error not certified within max_terms");
}

double scaled_tolerance(const SeriesState& st, double abs_tol) {
  return abs_tol * std::min(1.0, std::pow(st.c, st.s));
}

}  // namespace

AlphaVector::AlphaVector(std::vector<double> values)
    : values_(std::move(values)), max_(0.0) {
  if (values_.empty())
    throw DimensionMismatch("alpha vector must have at least one entry");
  for (double v : values_) {
    if (!(v > 0.0 && v <= 1.0))
      throw DivergentParameters("alpha entries must lie in (0, 1]");
    max_ = std::max(max_, v);
  }
}

double homogeneous_sym(std::int64_t t, const AlphaVector& alphas) {
  if (t < 0) throw IndexOutOfRange("homogeneous_sym requires t >= 0");
  std::vector<double> h(alphas.size(), 1.0);
  for (std::int64_t u = 1; u <= t; ++u) {
    h[0] *= alphas[0];
    for (std::size_t j = 1; j < h.size(); ++j)
      h[j] = h[j - 1] + alphas[j] * h[j];
  }
  return h.back();
}

void check_series_convergence(const AlphaVector& alphas,
                              const SeriesParams& params) {
  SeriesState st;
  st.init(SeriesSpec{alphas.values(), 0.0, params.s, false}, params.beta);
}

double series_M(const AlphaVector& alphas, const SeriesParams& params,
                const SeriesAccuracy& acc) {
  return std::exp(log_series_M(alphas, params, acc));
}

double log_series_M(const AlphaVector& alphas, const SeriesParams& params,
                    const SeriesAccuracy& acc) {
  SeriesSpec spec{alphas.values(), 0.0, params.s, false};
  std::vector<SeriesState> states(1);
  states[0].init(spec, params.beta);
  SeriesState& st = states[0];
  double tol = scaled_tolerance(st, acc.abs_tol);
  double corr = 0.0;
  run_shared(states, acc.max_terms, [&](std::int64_t t) {
    double e = st.tail_err(t);
    if (e <= tol || e <= kRelFloor * st.partial) {
      corr = st.tail_correction(t);
      return true;
    }
    return false;
  });
  return -st.s * std::log(st.c) + std::log(st.partial + corr);
}

double series_M_shifted(const AlphaVector& alphas, const SeriesParams& params,
                        std::int64_t shift, const SeriesAccuracy& acc) {
  if (params.beta + static_cast<double>(shift) <= 0.0)
    throw DivergentParameters("shifted offset beta + shift must be positive");
  SeriesParams shifted{params.beta + static_cast<double>(shift), params.s};
  return series_M(alphas, shifted, acc);
}

double series_tail_bound(const AlphaVector& alphas, const SeriesParams& params,
                         std::int64_t T) {
  if (T < 0) throw IndexOutOfRange("series_tail_bound requires T >= 0");
  std::vector<SeriesState> states(1);
  states[0].init(SeriesSpec{alphas.values(), 0.0, params.s, false},
                 params.beta);
  SeriesState& st = states[0];
  double unscale = std::exp(-st.s * std::log(st.c));
  double best = st.tail_upper_bound(0) * unscale;
  for (std::int64_t t = 1; t <= T; ++t) {
    st.advance(t);
    best = std::min(best, st.tail_upper_bound(t) * unscale);
  }
  return best;
}

double series_value(const SeriesSpec& spec, double beta,
                    const SeriesAccuracy& acc) {
  std::vector<SeriesState> states(1);
  states[0].init(spec, beta);
  SeriesState& st = states[0];
  double tol = scaled_tolerance(st, acc.abs_tol);
  double corr = 0.0;
  run_shared(states, acc.max_terms, [&](std::int64_t t) {
    double e = st.tail_err(t);
    if (e <= tol || e <= kRelFloor * std::fabs(st.partial)) {
      corr = st.tail_correction(t);
      return true;
    }
    return false;
  });
  return std::exp(-st.s * std::log(st.c)) * (st.partial + corr);
}

double series_ratio(const SeriesSpec& numerator, const SeriesSpec& denominator,
                    double beta, const SeriesAccuracy& acc) {
  std::vector<SeriesState> states(2);
  states[0].init(numerator, beta);
  states[1].init(denominator, beta);
  SeriesState& num = states[0];
  SeriesState& den = states[1];
  if (den.logw)
    throw DivergentParameters(
        "series_ratio requires a plain (log-free) denominator");
  double prefactor =
      std::exp(den.s * std::log(den.c) - num.s * std::log(num.c));
  double num_corr = 0.0;
  double den_corr = 0.0;
  run_shared(states, acc.max_terms, [&](std::int64_t t) {
    double en = num.tail_err(t);
    double ed = den.tail_err(t);
    double cn = num.tail_correction(t);
    double cd = den.tail_correction(t);
    double vn = num.partial + cn;
    double vd = den.partial + cd;
    double vd_low = vd - ed;
    if (!(vd_low > 0.0)) return false;
    double ratio_err = prefactor * (en + std::fabs(vn / vd) * ed) / vd_low;
    bool at_floor = en <= kRelFloor * std::fabs(vn) && ed <= kRelFloor * vd;
    if (ratio_err <= acc.abs_tol || at_floor) {
      num_corr = cn;
      den_corr = cd;
      return true;
    }
    return false;
  });
  return prefactor * ((num.partial + num_corr) / (den.partial + den_corr));
}

}  // namespace ugat
