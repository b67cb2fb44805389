#ifndef UGAT_TESTS_ORACLES_HPP
#define UGAT_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by the test suites.  They
// trade speed for obviousness: direct lattice sums with fixed long
// truncations and compensated accumulation, so library results can be checked
// against structurally independent computations.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Complete homogeneous symmetric polynomial by explicit enumeration of all
// compositions of t (independent of the library's prefix recurrence).
inline double homogeneous_sym_enumerated(int t, const std::vector<double>& w) {
  std::function<double(int, std::size_t)> rec = [&](int rem,
                                                    std::size_t j) -> double {
    if (j + 1 == w.size()) return std::pow(w[j], rem);
    double acc = 0.0;
    for (int k = 0; k <= rem; ++k)
      acc += std::pow(w[j], k) * rec(rem - k, j + 1);
    return acc;
  };
  return rec(t, 0);
}

// Visits every lattice point of the box [0, limit]^r.
inline void for_each_point(int r, int limit,
                           const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> x(r, 0);
  while (true) {
    fn(x);
    int j = 0;
    while (j < r && x[j] == limit) {
      x[j] = 0;
      ++j;
    }
    if (j == r) return;
    ++x[j];
  }
}

// Unnormalized kernel mass of one lattice point.
inline double kernel_weight(const std::vector<std::int64_t>& x,
                            const std::vector<double>& alpha, double beta,
                            double s) {
  double logw = 0.0;
  std::int64_t total = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    logw += static_cast<double>(x[j]) * std::log(alpha[j]);
    total += x[j];
  }
  logw -= s * std::log(static_cast<double>(total) + beta);
  return std::exp(logw);
}

// Normalizing sum by direct lattice enumeration over [0, limit]^r.
inline double series_lattice(const std::vector<double>& alpha, double beta,
                             double s, int limit) {
  KahanSum acc;
  for_each_point(static_cast<int>(alpha.size()), limit,
                 [&](const std::vector<std::int64_t>& x) {
                   acc.add(kernel_weight(x, alpha, beta, s));
                 });
  return acc.value();
}

// Normalizing sum via the total-count representation: sum_t h_t (t+beta)^-s
// with h_t enumerated term by term, up to index tmax inclusive.
inline double series_by_total(const std::vector<double>& alpha, double beta,
                              double s, int tmax) {
  KahanSum acc;
  for (int t = 0; t <= tmax; ++t)
    acc.add(homogeneous_sym_enumerated(t, alpha) *
            std::pow(static_cast<double>(t) + beta, -s));
  return acc.value();
}

// Joint probability of x by lattice normalization.
inline double pmf_lattice(const std::vector<std::int64_t>& x,
                          const std::vector<double>& alpha, double beta,
                          double s, int limit) {
  return kernel_weight(x, alpha, beta, s) /
         series_lattice(alpha, beta, s, limit);
}

}  // namespace oracle

#endif
