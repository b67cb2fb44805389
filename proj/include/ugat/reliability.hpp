#ifndef UGAT_RELIABILITY_HPP
#define UGAT_RELIABILITY_HPP

#include <cstdint>
#include <vector>

#include "ugat/distribution.hpp"

namespace ugat {

// Multivariate reliability function R(x) = P(X >= x componentwise).
double joint_survival(const UgatParams& p, const CountVector& x);

// P(X_i - x_i >= t | X >= x). Exactly 1 at t = 0.
double residual_survival(const UgatParams& p, std::size_t i, std::int64_t t,
                         const CountVector& x);

// Discrete hazard in direction i: P(X_i = x_i | X >= x),
// equal to 1 - R(x + e_i)/R(x).
double hazard_component(const UgatParams& p, std::size_t i,
                        const CountVector& x);

// Mean residual life in direction i: sum_{t>=0} residual_survival(i, t, x).
// The t = 0 term alone is 1, so the value is always >= 1. For a unit weight
// coordinate the sum is finite only when s > dimension + 1.
double mmrl_component(const UgatParams& p, std::size_t i,
                      const CountVector& x);

enum class AgingKind { MNBU, MNBUE, MIFR };

enum class AgingVerdict { Equal, HoldsLe, HoldsGe, Mixed };

struct AgingCheck {
  AgingVerdict verdict = AgingVerdict::Equal;
  double min_delta = 0.0;
  double max_delta = 0.0;
};

// Evaluates the defining inequality of the aging class over the grids,
// oriented so that delta <= 0 at every probe means the named class holds
// (HoldsLe); the mirrored class is HoldsGe. Probes within eq_tol of zero in
// both directions give Equal.
//   MNBU:  delta = R(x+t) - R(x) R(t)           over x_grid x t_grid
//   MNBUE: delta = mmrl_i(x) - mmrl_i(0)        over x_grid, each i
//   MIFR:  delta = h_i(x) - h_i(x+t)            over x_grid x t_grid, each i
AgingCheck aging_class_check(const UgatParams& p, AgingKind kind,
                             const std::vector<CountVector>& x_grid,
                             const std::vector<CountVector>& t_grid,
                             double eq_tol = 1e-12);

struct ReliabilityReport {
  std::vector<CountVector> grid;
  std::vector<double> survival;
  std::vector<std::vector<double>> hazard;
  std::vector<std::vector<double>> mmrl;
  AgingCheck mnbu;
  AgingCheck mnbue;
  AgingCheck mifr;
  double eq_tol = 1e-12;
};

ReliabilityReport reliability_report(const UgatParams& p,
                                     const std::vector<CountVector>& x_grid,
                                     const std::vector<CountVector>& t_grid,
                                     double eq_tol = 1e-12);

}  // namespace ugat

#endif
