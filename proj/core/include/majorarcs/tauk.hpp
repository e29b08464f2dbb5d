#pragma once
// The tau_k instance of the sieve hypothesis: local factors G_{d,k}(s),
// the coefficients h_{j,k}(d), their Moebius transforms (h_{j,k}*mu)(r),
// and the density basis u_j / U_j.

#include <cstdint>
#include <vector>

#include "majorarcs/arith.hpp"
#include "majorarcs/mp.hpp"
#include "majorarcs/series.hpp"

namespace majorarcs {

// u_{j,k}(t) = (log t)^{k-1-j} / (k-1-j)! for t >= 1, and 0 for t < 1
// (the closed-form antiderivative then vanishes at t = 1, and every use has
// n >= 1). U_j(x) = int_1^x u_j.
struct DensityBasis {
  int k;

  double u(int j, double t) const;
  double U(int j, double x) const;
  Real u_mp(int j, const Real& t) const;
};

// int_1^x (log t)^m dt = x * sum_{i<=m} (-1)^{m-i} (m!/i!) (log x)^i - (-1)^m m!
double integral_log_power(int m, double x);
Real integral_log_power(int m, const Real& x);

// One local factor of G_{d,k}(s) at p^v || d, as a Taylor series around s=1:
//   (1 - p^{-s})^k * (1/tau_k(p^v)) * sum_{mu>=0} tau_k(p^{mu+v}) p^{-mu s},
// with the inner sum in the closed form
//   x^{-v} ((1-x)^{-k} - sum_{m<v} tau_k(p^m) x^m),  x = p^{-s}.
// Throws std::domain_error if p is not prime. k >= 1.
SeriesR local_factor_series(uint64_t p, int v, int k, int order);

// G_{d,k}(s) = product of local factors over p^v || d. G_{1,k} = 1.
SeriesR correction_series(uint64_t d, int k, int order);

// h_{j,k}(d) = tau_k(d) (b_j(d)/j! + b_{j-1}(d)/(j-1)!) where b_j(d) is the
// j-th derivative at s=1 of {zeta(s)(s-1)}^k G_{d,k}(s) / (s d^{s-1});
// b_{-1} = 0. Computed from the series product with d^{-(s-1)} = e^{-X log d}.
Real h_coefficient(int j, uint64_t d, int k, unsigned precision_bits = kDefaultPrecisionBits);

// Eagerly built tables of h_{j,k}(d) for d <= R and (h_{j,k}*mu)(r) for
// r <= R, 0 <= j < k. Immutable and shareable once built.
class TaukModel {
 public:
  static TaukModel build(int k, uint64_t R, unsigned precision_bits = kDefaultPrecisionBits,
                         int threads = 1);

  int k() const { return k_; }
  uint64_t R() const { return R_; }
  unsigned prec_bits() const { return prec_bits_; }
  const DensityBasis& basis() const { return basis_; }

  const Real& h(int j, uint64_t d) const { return h_.at(j).at(d); }
  const Real& h_star(int j, uint64_t r) const { return hstar_.at(j).at(r); }
  double h_d(int j, uint64_t d) const { return static_cast<double>(h(j, d)); }
  double h_star_d(int j, uint64_t r) const { return static_cast<double>(h_star(j, r)); }

  // Fast-mode approximation (h_{0,k} (-log)^j / j!) * mu; the discrepancy
  // against the exact table is only order-of-magnitude controlled.
  Real h_star_approx(int j, uint64_t r) const;
  double max_fast_mode_discrepancy(int j) const;  // max_r |exact - approx|

 private:
  int k_ = 0;
  uint64_t R_ = 0;
  unsigned prec_bits_ = kDefaultPrecisionBits;
  DensityBasis basis_{0};
  std::vector<std::vector<Real>> h_;      // h_[j][d], d = 0 unused
  std::vector<std::vector<Real>> hstar_;  // hstar_[j][r]
};

// A_d(x) = sum_{n<=x, d|n} f(n), exact brute force over the sieved table.
// x > table.limit throws std::domain_error; d > x gives the empty sum 0.
double divisor_class_sum(const ArithmeticTable& f, double x, uint64_t d);

// Hypothesis-1 main term sum_j (h_j(d)/d) U_j(x).
double main_term_Ad(const TaukModel& model, double x, uint64_t d);

}  // namespace majorarcs
