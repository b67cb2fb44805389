#include "ugat/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ugat/errors.hpp"

namespace ugat {
namespace {

void check_point(const UgatParams& p, const CountVector& x) {
  if (x.size() != p.dimension())
    throw DimensionMismatch(
        "count vector dimension does not match the parameter dimension");
  for (std::int64_t v : x)
    if (v < 0) throw IndexOutOfRange("count entries must be nonnegative");
}

void check_coordinate(const UgatParams& p, std::size_t i) {
  if (i >= p.dimension())
    throw IndexOutOfRange("coordinate index out of range");
}

std::int64_t total_of(const CountVector& x) {
  std::int64_t m = 0;
  for (std::int64_t v : x) m += v;
  return m;
}

// M(beta + base + extra) / M(beta + base) under one shared truncation index.
double residual_ratio(const UgatParams& p, double base, double extra) {
  SeriesSpec num{p.alphas().values(), base + extra, p.s(), false};
  SeriesSpec den{p.alphas().values(), base, p.s(), false};
  return series_ratio(num, den, p.beta(), p.accuracy());
}

double factorial_of(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

double joint_survival(const UgatParams& p, const CountVector& x) {
  check_point(p, x);
  double head = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j)
    head *= std::pow(p.alphas()[j], static_cast<double>(x[j]));
  return head * residual_ratio(p, 0.0, static_cast<double>(total_of(x)));
}

double residual_survival(const UgatParams& p, std::size_t i, std::int64_t t,
                         const CountVector& x) {
  check_point(p, x);
  check_coordinate(p, i);
  if (t < 0) throw IndexOutOfRange("residual horizon must be nonnegative");
  double base = static_cast<double>(total_of(x));
  return std::pow(p.alphas()[i], static_cast<double>(t)) *
         residual_ratio(p, base, static_cast<double>(t));
}

double hazard_component(const UgatParams& p, std::size_t i,
                        const CountVector& x) {
  return 1.0 - residual_survival(p, i, 1, x);
}

double mmrl_component(const UgatParams& p, std::size_t i,
                      const CountVector& x) {
  check_point(p, x);
  check_coordinate(p, i);
  double a = p.alphas()[i];
  double s = p.s();
  int r = static_cast<int>(p.dimension());
  double rd = static_cast<double>(r);
  const SeriesAccuracy& acc = p.accuracy();
  double base = static_cast<double>(total_of(x));
  double v = p.beta() + base;

  if (a == 1.0 && !(s > rd + 1.0))
    throw NonConvergent(
        "mean residual life diverges for a unit weight coordinate unless "
        "s > dimension + 1");

  // value of M(v) for the unit-weight tail bound, evaluated once
  double m_v = a == 1.0
                   ? std::exp(log_series_M(p.alphas(), SeriesParams{v, s},
                                           acc))
                   : 0.0;

  double sum = 1.0;  // t = 0 term
  double apow = 1.0;
  for (std::int64_t t = 1; t <= acc.max_terms; ++t) {
    double td = static_cast<double>(t);
    apow *= a;
    double ratio = residual_ratio(p, base, td);
    sum += apow * ratio;

    double tail;
    if (a < 1.0) {
      double g = s < 0.0 ? std::pow((v + td + 1.0) / (v + td), -s) : 1.0;
      double rho = a * g;
      if (!(rho < 1.0)) continue;
      tail = apow * a * ratio * g / (1.0 - rho);
    } else {
      double u = v + td + 1.0;
      double kappa = std::max(1.0, std::pow((rd - 1.0) / u, rd - 1.0));
      tail = kappa / factorial_of(r - 1) * (1.0 / u + 1.0 / (s - rd)) *
             (std::pow(u, rd - s) + std::pow(u, rd + 1.0 - s) / (s - rd - 1.0)) /
             m_v;
    }
    if (tail <= acc.abs_tol * std::max(1.0, sum) || tail <= 4e-16 * sum)
      return sum;
  }
  throw NonConvergent("mean residual life tail not certified within max_terms");
}

namespace {

CountVector add_points(const CountVector& x, const CountVector& t) {
  CountVector out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j] + t[j];
  return out;
}

AgingVerdict classify(double min_delta, double max_delta, double eq_tol) {
  bool le = max_delta <= eq_tol;
  bool ge = min_delta >= -eq_tol;
  if (le && ge) return AgingVerdict::Equal;
  if (le) return AgingVerdict::HoldsLe;
  if (ge) return AgingVerdict::HoldsGe;
  return AgingVerdict::Mixed;
}

}  // namespace

AgingCheck aging_class_check(const UgatParams& p, AgingKind kind,
                             const std::vector<CountVector>& x_grid,
                             const std::vector<CountVector>& t_grid,
                             double eq_tol) {
  std::vector<double> deltas;
  switch (kind) {
    case AgingKind::MNBU:
      for (const CountVector& x : x_grid) {
        double rx = joint_survival(p, x);
        for (const CountVector& t : t_grid) {
          double rt = joint_survival(p, t);
          deltas.push_back(joint_survival(p, add_points(x, t)) - rx * rt);
        }
      }
      break;
    case AgingKind::MNBUE: {
      CountVector origin(p.dimension(), 0);
      std::vector<double> at_origin(p.dimension());
      for (std::size_t i = 0; i < p.dimension(); ++i)
        at_origin[i] = mmrl_component(p, i, origin);
      for (const CountVector& x : x_grid)
        for (std::size_t i = 0; i < p.dimension(); ++i)
          deltas.push_back(mmrl_component(p, i, x) - at_origin[i]);
      break;
    }
    case AgingKind::MIFR:
      for (const CountVector& x : x_grid) {
        std::vector<double> hx(p.dimension());
        for (std::size_t i = 0; i < p.dimension(); ++i)
          hx[i] = hazard_component(p, i, x);
        for (const CountVector& t : t_grid) {
          CountVector xt = add_points(x, t);
          for (std::size_t i = 0; i < p.dimension(); ++i)
            deltas.push_back(hx[i] - hazard_component(p, i, xt));
        }
      }
      break;
  }
  if (deltas.empty())
    throw DimensionMismatch("aging class check needs nonempty grids");

  AgingCheck out;
  out.min_delta = *std::min_element(deltas.begin(), deltas.end());
  out.max_delta = *std::max_element(deltas.begin(), deltas.end());
  out.verdict = classify(out.min_delta, out.max_delta, eq_tol);
  return out;
}

ReliabilityReport reliability_report(const UgatParams& p,
                                     const std::vector<CountVector>& x_grid,
                                     const std::vector<CountVector>& t_grid,
                                     double eq_tol) {
  ReliabilityReport report;
  report.grid = x_grid;
  report.eq_tol = eq_tol;
  for (const CountVector& x : x_grid) {
    report.survival.push_back(joint_survival(p, x));
    std::vector<double> hz(p.dimension());
    std::vector<double> mm(p.dimension());
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      hz[i] = hazard_component(p, i, x);
      mm[i] = mmrl_component(p, i, x);
    }
    report.hazard.push_back(std::move(hz));
    report.mmrl.push_back(std::move(mm));
  }
  report.mnbu = aging_class_check(p, AgingKind::MNBU, x_grid, t_grid, eq_tol);
  report.mnbue =
      aging_class_check(p, AgingKind::MNBUE, x_grid, t_grid, eq_tol);
  report.mifr = aging_class_check(p, AgingKind::MIFR, x_grid, t_grid, eq_tol);
  return report;
}

}  // namespace ugat
