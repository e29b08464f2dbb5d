#pragma once
// Theoretical main terms: the Euler product C_k in its two forms, the
// per-prime local identity tying it to (h_{0,k}*mu), and the leading
// variance main term assembled from C_k and P_k.

#include <cstdint>
#include <utility>

#include "majorarcs/mp.hpp"
#include "majorarcs/polynomial.hpp"

namespace majorarcs {

enum class CkForm {
  full_sum,               // (1-1/p)^{k^2} sum_nu tau_k(p^nu)^2 / p^nu, truncated
  squarefree_polynomial,  // (1-1/p)^{(k-1)^2} sum_{nu<k} C(k-1,nu)^2 / p^nu, exact per prime
};

struct EulerProductValue {
  int k = 0;
  uint64_t prime_cutoff = 0;
  Real value;
  double tail_bound = 0.0;  // crude majorant 2 k^4 / P for the omitted primes
  CkForm form = CkForm::squarefree_polynomial;
};

// C_k as a product over primes p <= P. Deterministic for any thread count
// (fixed prime blocks, sequential merge).
EulerProductValue compute_ck(int k, uint64_t P, unsigned precision_bits = kDefaultPrecisionBits,
                             CkForm form = CkForm::squarefree_polynomial, int threads = 1);

// The single local factor of C_k at p, in the requested form.
Real ck_local_factor(int k, uint64_t p, CkForm form, int trunc_bits = 192);

// Lemma-level local identity: lhs is
//   (1-1/p)^{(k-1)^2} sum_{nu <= trunc} (h_{0,k}*mu)(p^nu)^2 / phi(p^nu)
// via the exact prime-power formula (h_{0,k}*mu)(p^nu) = (1-1/p) h_{0,k-1}(p^nu),
// rhs is the exact polynomial-form local factor of C_k. Both exact rationals
// up to the nu-truncation, returned at the current precision.
std::pair<Real, Real> lemma_ck_local(int k, uint64_t p, int trunc);

// C_k x (log x)^{k^2-1}/(k^2-1)! * (1 - v^{(k-1)^2} P_k(v)), v = log R/log x,
// computed in multiprecision. The Q_k/log x correction is never included
// (qk_included stays false in reports). pk is P_k from assemble_pk(k).
Real variance_main_term(int k, double x, uint64_t R, const Real& ck, const PolyQ& pk);

// Convenience overload: computes C_k (primes <= P) and P_k internally.
Real variance_main_term(int k, double x, uint64_t R, uint64_t P = 1000000,
                        unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace majorarcs
