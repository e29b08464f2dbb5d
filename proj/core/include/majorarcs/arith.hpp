#pragma once
// Sieves, factorization and elementary arithmetic functions: tau_k, mu, phi,
// Ramanujan sums c_r(m), the kappa(m,r) coefficients and Moebius transforms.
// Tables are immutable after construction and safe to share across threads.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace majorarcs {

using std::int64_t;
using std::uint64_t;

enum class TableKind : uint64_t {
  tau_k = 0,
  moebius = 1,
  euler_phi = 2,
  smallest_prime_factor = 3,
};

// Dense table of an arithmetic function on [1..limit]; values[0] is unused.
struct ArithmeticTable {
  TableKind kind = TableKind::tau_k;
  int k = 0;  // order of tau_k; 0 for the other kinds
  uint64_t limit = 0;
  std::vector<int64_t> values;

  int64_t operator()(uint64_t n) const { return values[n]; }
};

// Linear sieve on [1..limit]. tau_k is filled through the smallest-prime-factor
// decomposition and tau_k(p^e) = C(e+k-1, k-1); value arithmetic is
// overflow-checked and throws std::overflow_error instead of wrapping.
// limit = 0 throws std::invalid_argument.
ArithmeticTable sieve(TableKind kind, uint64_t limit, int k = 0);

struct Factorization {
  uint64_t n = 1;
  std::vector<std::pair<uint64_t, int>> factors;  // (p, v_p(n)), p increasing
};

Factorization factorize(uint64_t n);  // trial division
Factorization factorize(uint64_t n, const ArithmeticTable& spf_table);
std::vector<uint64_t> divisors(const Factorization& f);  // sorted ascending
std::vector<uint64_t> divisors(uint64_t n);

int64_t moebius(uint64_t n);
uint64_t euler_phi(uint64_t n);
int v_p(uint64_t n, uint64_t p);  // p-adic valuation

// Ramanujan sum c_r(m) = sum_{(a,r)=1} e(ma/r) evaluated through the closed
// form mu(r/(r,m)) phi(r) / phi(r/(r,m)); the exponential sum itself is kept
// as a test oracle. (r,0) = r, so c_r(0) = phi(r).
int64_t ramanujan_sum(uint64_t r, int64_t m);

// kappa(m,r) = sum_{k l = m} mu(r/k) mu(l) / phi(r/k), for m | r, via the
// closed form mu(r/m)/phi(r/m) * prod_{p | m, v_p(m)=v_p(r)} (1 - 1/p)^{-1}.
// m not dividing r throws std::domain_error.
mpq_class kappa(uint64_t m, uint64_t r);

// (g*mu)(r) = sum_{d|r} g(d) mu(r/d). The table must cover every divisor of
// r; a missing one throws std::domain_error.
template <typename T>
T moebius_transform(const std::map<uint64_t, T>& g, uint64_t r) {
  T acc(0);
  for (uint64_t d : divisors(r)) {
    int64_t mu = moebius(r / d);
    if (mu == 0) continue;
    auto it = g.find(d);
    if (it == g.end()) throw std::domain_error("moebius_transform: table is missing divisor " + std::to_string(d));
    if (mu > 0)
      acc += it->second;
    else
      acc -= it->second;
  }
  return acc;
}

// Exact binomial C(n, k) and the checked 64-bit version used by the sieve.
mpz_class binomial_mpz(uint64_t n, uint64_t k);
int64_t binomial_checked(uint64_t n, uint64_t k);  // throws std::overflow_error

}  // namespace majorarcs
