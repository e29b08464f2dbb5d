#pragma once
// The approximation layer: F_R(n), the progression sums rho_R / rho*_R, the
// Granville-Soundararajan weights g_j(q,a), the twisted sums E_f and their
// discrepancy R_f, and the corollary-level residual monitor.

#include <complex>
#include <cstdint>
#include <vector>

#include "majorarcs/arith.hpp"
#include "majorarcs/tauk.hpp"

namespace majorarcs {

// n <= x versus a < n <= x. The congruence class is always a mod q; the
// range cut uses the unreduced a.
enum class SumRange { closed, half_open };

// F_R(n) = sum_j u_j(n) sum_{r<=R} (h_j*mu)(r) mu(r/(r,n)) / phi(r/(r,n)).
// Construction precomputes, for every r <= R, the residue table
// t -> mu(r/(r,t))/phi(r/(r,t)), so one evaluation costs O(R) lookups and
// a full sweep costs O(x R) sequential adds.
class FrEvaluator {
 public:
  FrEvaluator(const TaukModel& model, uint64_t R);

  int k() const { return k_; }
  uint64_t R() const { return R_; }

  double operator()(uint64_t n) const;

  // F_R(1..x); slot 0 is zero. Deterministic for any thread count.
  std::vector<double> sweep(uint64_t x, int threads = 1) const;

 private:
  int k_;
  uint64_t R_;
  std::vector<std::vector<double>> base_;   // base_[r][t] = mu(r/(r,t))/phi(r/(r,t))
  std::vector<std::vector<double>> hstar_;  // hstar_[j][r]
  DensityBasis basis_;
};

struct ApproximationContext {
  const TaukModel* model;
  const ArithmeticTable* table;
  uint64_t x;
  uint64_t R;

  ApproximationContext(const TaukModel& m, const ArithmeticTable& t, uint64_t x_, uint64_t R_);
};

// rho_R / rho*_R by direct summation of F_R over the progression.
double rho_sum(const FrEvaluator& fr, uint64_t x, uint64_t q, int64_t a, SumRange range);
// Same but over a precomputed sweep table fr_table[n] = F_R(n).
double rho_sum(const std::vector<double>& fr_table, uint64_t x, uint64_t q, int64_t a, SumRange range);

// g_j(q,a) = 1/phi(q/(q,a)) sum_{d | q/(q,a)} mu(d) h_j((q,a)d) / ((q,a)d).
double g_weight(const TaukModel& model, int j, uint64_t q, int64_t a);

// Both sides of sum_{r|s} (h_j*mu)(r) mu(r/(r,a))/phi(r/(r,a)) = s g_j(s,a).
struct IdentityPair {
  double lhs, rhs;
};
IdentityPair divisor_identity_sides(const TaukModel& model, uint64_t s, int64_t a, int j);

// E_f(x; b/r) = sum_{n<=x} e(bn/r) f(n), Kahan-compensated.
std::complex<double> exponential_sum(const ArithmeticTable& f, uint64_t x, uint64_t b, uint64_t r);

// R_f(x; b/r) as E_f minus the main term of the resonance identity,
// R_f = E_f(x;b/r) - sum_{m|r} mu(r/m) m / phi(r) * A_m(x).
std::complex<double> discrepancy_sum(const ArithmeticTable& f, uint64_t x, uint64_t b, uint64_t r);

// Independent oracle: the defining double sum
// R_f(x; b/r) = sum_{c=1..r} e(bc/r) { A(x;r,c) - (1/phi(r/(r,c))) sum_{(n,r)=(c,r)} f(n) }.
std::complex<double> discrepancy_sum_direct(const ArithmeticTable& f, uint64_t x, uint64_t b, uint64_t r);

// sum_{q<=q_max} | A(x;q,a) - sum_j g_j(q,a) U_j(x) |, the quantity bounded
// by the Bombieri-Vinogradov style corollary; for empirical monitoring.
double corollary_bv_residual(const TaukModel& model, const ArithmeticTable& f, uint64_t x, int64_t a,
                             uint64_t q_max);

}  // namespace majorarcs
