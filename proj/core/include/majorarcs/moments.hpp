#pragma once
// Brute-force empirical moments (first moment M1, variance V, ||Delta_R||^2)
// against the theoretical main terms, plus the exact kappa-identity suite.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "majorarcs/approx.hpp"
#include "majorarcs/arith.hpp"
#include "majorarcs/tauk.hpp"

namespace majorarcs {

// A(x;q,a) (closed) and A*(x;q,a) (half_open), exact sums over the table.
double progression_count(const ArithmeticTable& f, uint64_t x, uint64_t q, int64_t a, SumRange range);

struct FirstMomentResult {
  double m1 = 0.0;        // sum over x/N < q <= x of (A* - rho*)
  double m1_tilde = 0.0;  // sum over 1 <= q <= N
  double a_star_mass = 0.0;  // sum over x/N < q <= x of A*(x;q,a), the comparison mass
};

// Divisor-enumeration evaluation: M1 = sum_n Delta_R(n) #{q | n-a : x/N < q <= x}.
// delta[n] = f(n) - F_R(n) must cover 1..x; spf must cover x + |a|.
// Requires -x/N < a <= x, else std::domain_error.
FirstMomentResult first_moment(const ArithmeticTable& f, const std::vector<double>& delta,
                               const ArithmeticTable& spf, uint64_t x, uint64_t N, int64_t a);

// Independent oracle: the direct double loop over (q, s).
FirstMomentResult first_moment_direct(const ArithmeticTable& f, const std::vector<double>& delta,
                                      uint64_t x, uint64_t N, int64_t a);

// u_1*(x,R) (order 1) and u_2*(x,R) (order 2):
// sum_j (|u_j(x)|+1) sum_{r<=R} |(h_j*mu)(r)| r^ord / phi(r)^ord.
double u_star(const TaukModel& model, double x, uint64_t R, int order);
// sigma_j(R) = sum_{r<=R} |(h_j*mu)(r)| r / phi(r).
double sigma_weight(const TaukModel& model, int j, uint64_t R);

struct VarianceReport {
  int k = 0;
  uint64_t x = 0, N = 0, R = 0;
  struct Empirical {
    std::map<int64_t, double> M1_by_a;  // filled by first-moment runs
    double V = 0.0;
    double norm_f_sq = 0.0;
    double norm_FR_sq = 0.0;
    double cross_term = 0.0;
    double norm_delta_sq = 0.0;
  } empirical;
  struct Theoretical {
    double main_term_sum_r = 0.0;  // sum_{r<=R} (1/phi(r)) int (sum_j (h_j*mu)(r) u_j)^2
    double Ck_leading = 0.0;       // C_k x (log x)^{k^2-1} / (k^2-1)!
    double Pk_correction = 0.0;    // v^{(k-1)^2} P_k(v)
    bool qk_included = false;      // the 1/log x * Q_k correction is never included
  } theoretical;
  struct Diagnostics {
    double seconds = 0.0;
    uint64_t q_count = 0;
    uint64_t term_count = 0;
  } diagnostics;
};

// V(x,N,R) = sum_{x/2N < q <= x/N} sum_{1<=a<=q} (A(x;q,a) - rho_R(x;q,a))^2
// from one Delta_R sweep; also fills the norms of Eq-M2DELTA bookkeeping.
// Deterministic for any thread count.
VarianceReport variance(const ArithmeticTable& f, const TaukModel& model, uint64_t x, uint64_t N,
                        uint64_t R, int threads = 1);

// sum over classes of one modulus: sum_{t mod q} (sum_{n<=x, n≡t} delta[n])^2.
double class_square_sum(const std::vector<double>& delta, uint64_t x, uint64_t q);

// m(N) = sum_{x/N < q <= x} class_square_sum(q); V = m(2N) - m(N) by
// construction. Quadratic in x, meant for small-scale checks.
double moment_tail_sum(const std::vector<double>& delta, uint64_t x, double N);

// ||f||^2 - sum_{r<=R} (1/phi(r)) int_1^x (sum_j (h_j*mu)(r) u_j(t))^2 dt;
// norm_f_sq is the empirical ||f||_2^2.
double delta_norm_theory(const TaukModel& model, double x, uint64_t R, double norm_f_sq);
// The subtracted r-sum alone (the theoretical ||F_R||^2 main term).
double fr_norm_theory(const TaukModel& model, double x, uint64_t R);

struct KappaIdentityReport {
  uint64_t r_max = 0;
  uint64_t pairs_checked = 0;   // (r, r') pairs of the exact second identity
  uint64_t moduli_checked = 0;  // r values of the first (multiprecision) identity
  double max_err_first = 0.0;   // worst |lhs - rhs| over the first identity
  bool second_exact = true;     // second identity held exactly for all pairs
};

// Verifies, for all r, r' <= r_max:
//   (1) sum_{m|r} kappa(m,r) h_{j'}(m)/m = (h_{j'}*mu)(r)/phi(r)  (multiprecision)
//   (2) sum_{m|r, m'|r'} kappa(m,r) kappa(m',r')/[m,m'] = 1_{r=r'}/phi(r)  (exact)
// Any violation of (2) throws std::runtime_error naming (r, r').
KappaIdentityReport kappa_identity_suite(const TaukModel& model, uint64_t r_max);

}  // namespace majorarcs
