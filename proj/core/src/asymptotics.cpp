#include "majorarcs/asymptotics.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "majorarcs/arith.hpp"
#include "majorarcs/residues.hpp"

namespace majorarcs {

namespace {

std::vector<uint64_t> primes_up_to(uint64_t P) {
  std::vector<bool> comp(P + 1, false);
  std::vector<uint64_t> primes;
  for (uint64_t n = 2; n <= P; ++n) {
    if (comp[n]) continue;
    primes.push_back(n);
    for (uint64_t m = n * n; m <= P; m += n) comp[m] = true;
  }
  return primes;
}

int64_t tau_prime_power(int k, int e) { return binomial_checked(uint64_t(e) + k - 1, uint64_t(k) - 1); }

Real ck_local_full(int k, uint64_t p, unsigned bits) {
  // (1 - 1/p)^{k^2} sum_nu tau_k(p^nu)^2 / p^nu, truncated once the terms
  // fall below the working precision
  Real invp = Real(1) / Real(p);
  Real s(1), term(1), pw(1);
  Real eps = ldexp(Real(1), -static_cast<int>(bits + 16));
  for (int nu = 1; nu < 100000; ++nu) {
    pw *= invp;
    Real t = to_real(mpz_class(tau_prime_power(k, nu)));
    term = t * t * pw;
    s += term;
    if (term < eps * s) break;
  }
  return pow(Real(1) - invp, k * k) * s;
}

Real ck_local_poly(int k, uint64_t p) {
  // (1 - 1/p)^{(k-1)^2} sum_{nu <= k-1} C(k-1, nu)^2 p^{-nu}, finite
  Real invp = Real(1) / Real(p);
  Real s(0);
  for (int nu = k - 1; nu >= 0; --nu) {
    mpz_class b = binomial_mpz(k - 1, nu);
    s = s * invp + to_real(mpz_class(b * b));
  }
  return pow(Real(1) - invp, (k - 1) * (k - 1)) * s;
}

}  // namespace

Real ck_local_factor(int k, uint64_t p, CkForm form, int trunc_bits) {
  if (k < 1) throw std::domain_error("ck_local_factor: k >= 1");
  return (form == CkForm::full_sum) ? ck_local_full(k, p, static_cast<unsigned>(trunc_bits))
                                    : ck_local_poly(k, p);
}

EulerProductValue compute_ck(int k, uint64_t P, unsigned precision_bits, CkForm form, int threads) {
  if (k < 1) throw std::domain_error("compute_ck: k >= 1");
  if (P < 2) throw std::domain_error("compute_ck: P >= 2");
  PrecisionGuard guard(precision_bits);

  EulerProductValue out;
  out.k = k;
  out.prime_cutoff = P;
  out.form = form;
  out.tail_bound = 2.0 * std::pow(static_cast<double>(k), 4) / static_cast<double>(P);

  if (k == 1) {  // every local factor is 1
    out.value = Real(1);
    return out;
  }

  std::vector<uint64_t> primes = primes_up_to(P);
  constexpr size_t kBlock = 2048;  // fixed blocks keep the reduction order deterministic
  size_t nblocks = (primes.size() + kBlock - 1) / kBlock;
  std::vector<Real> partial(nblocks);

#pragma omp parallel num_threads(threads)
  {
    set_precision_bits(precision_bits);
#pragma omp for schedule(static)
    for (int64_t b = 0; b < static_cast<int64_t>(nblocks); ++b) {
      Real prod(1);
      size_t lo = static_cast<size_t>(b) * kBlock;
      size_t hi = std::min(primes.size(), lo + kBlock);
      for (size_t i = lo; i < hi; ++i)
        prod *= (form == CkForm::full_sum) ? ck_local_full(k, primes[i], precision_bits)
                                           : ck_local_poly(k, primes[i]);
      partial[b] = prod;
    }
  }
  Real v(1);
  for (const Real& p : partial) v *= p;
  out.value = v;
  return out;
}

std::pair<Real, Real> lemma_ck_local(int k, uint64_t p, int trunc) {
  if (k < 2) throw std::domain_error("lemma_ck_local: k >= 2");
  if (trunc < 2 * k) throw std::domain_error("lemma_ck_local: trunc >= 2k");

  // h_{0,k-1}(p^nu) = (1-1/p)^{k-1} p^nu ((1-1/p)^{-(k-1)} - sum_{m<nu} tau_{k-1}(p^m) p^{-m}),
  // all exact rationals
  mpq_class invp(1, static_cast<unsigned long>(p));
  invp.canonicalize();
  mpq_class one_minus = 1 - invp;
  mpq_class geom = 1;  // (1-1/p)^{-(k-1)}
  for (int i = 0; i < k - 1; ++i) geom /= one_minus;

  mpq_class lhs_sum = 1;  // nu = 0 term: (h_{0,k}*mu)(1)^2 / phi(1) = 1
  mpq_class partial(0);   // sum_{m<nu} tau_{k-1}(p^m) p^{-m}
  mpq_class pm(1), pnu(1);
  mpq_class om_k = 1;  // (1-1/p)^{k-1}
  for (int i = 0; i < k - 1; ++i) om_k *= one_minus;
  for (int nu = 1; nu <= trunc; ++nu) {
    partial += mpq_class(tau_prime_power(k - 1, nu - 1)) * pm;
    pm *= invp;
    pnu *= mpq_class(static_cast<unsigned long>(p));
    mpq_class h0 = om_k * pnu * (geom - partial);
    mpq_class hstar = one_minus * h0;  // (h_{0,k}*mu)(p^nu)
    mpq_class phi = pnu - pnu * invp;  // phi(p^nu) = p^nu (1 - 1/p)
    lhs_sum += hstar * hstar / phi;
  }
  mpq_class pref = 1;
  for (int i = 0; i < (k - 1) * (k - 1); ++i) pref *= one_minus;
  mpq_class lhs = pref * lhs_sum;

  mpq_class rhs(0);
  for (int nu = k - 1; nu >= 0; --nu) {
    mpz_class b = binomial_mpz(k - 1, nu);
    rhs = rhs * invp + mpq_class(b * b);
  }
  rhs *= pref;

  return {to_real(lhs), to_real(rhs)};
}

Real variance_main_term(int k, double x, uint64_t R, const Real& ck, const PolyQ& pk) {
  if (R < 1 || static_cast<double>(R) > x) throw std::domain_error("variance_main_term: 1 <= R <= x");
  Real lx = log(Real(x));
  Real v = log(Real(R)) / lx;
  Real corr = (R == 1) ? Real(0) : pow(v, (k - 1) * (k - 1)) * pk.eval(v);
  Real fact(1);
  for (int i = 2; i <= k * k - 1; ++i) fact *= i;
  return ck * Real(x) * pow(lx, k * k - 1) / fact * (Real(1) - corr);
}

Real variance_main_term(int k, double x, uint64_t R, uint64_t P, unsigned precision_bits) {
  PrecisionGuard guard(precision_bits);
  EulerProductValue ck = compute_ck(k, P, precision_bits);
  PolyQ pk = assemble_pk(k).poly;
  return variance_main_term(k, x, R, ck.value, pk);
}

}  // namespace majorarcs
