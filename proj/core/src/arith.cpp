#include "majorarcs/arith.hpp"

#include <algorithm>
#include <numeric>

namespace majorarcs {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("arith: 64-bit value overflow");
  return r;
}

// tau_k(p^e) = C(e+k-1, k-1)
int64_t tau_prime_power(int k, int e) { return binomial_checked(uint64_t(e) + k - 1, uint64_t(k) - 1); }

}  // namespace

int64_t binomial_checked(uint64_t n, uint64_t k) {
  mpz_class b = binomial_mpz(n, k);
  if (!b.fits_slong_p()) throw std::overflow_error("binomial_checked: C(n,k) exceeds 64 bits");
  return b.get_si();
}

mpz_class binomial_mpz(uint64_t n, uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ArithmeticTable sieve(TableKind kind, uint64_t limit, int k) {
  if (limit == 0) throw std::invalid_argument("sieve: empty domain (limit = 0)");
  if (kind == TableKind::tau_k && k < 1) throw std::invalid_argument("sieve: tau_k needs k >= 1");

  ArithmeticTable t;
  t.kind = kind;
  t.k = (kind == TableKind::tau_k) ? k : 0;
  t.limit = limit;
  t.values.assign(limit + 1, 0);

  // Linear sieve keeping, for each n, its smallest prime factor p and the
  // exponent v_p(n); every composite is crossed exactly once.
  std::vector<uint32_t> spf(limit + 1, 0);
  std::vector<uint32_t> spf_exp(limit + 1, 0);
  std::vector<uint64_t> primes;
  primes.reserve(limit > 16 ? limit / 8 : 8);

  for (uint64_t n = 2; n <= limit; ++n) {
    if (spf[n] == 0) {
      spf[n] = static_cast<uint32_t>(n);
      spf_exp[n] = 1;
      primes.push_back(n);
    }
    for (uint64_t p : primes) {
      if (p > spf[n] || p * n > limit) break;
      uint64_t m = p * n;
      spf[m] = static_cast<uint32_t>(p);
      spf_exp[m] = (p == spf[n]) ? spf_exp[n] + 1 : 1;
    }
  }

  switch (kind) {
    case TableKind::smallest_prime_factor: {
      t.values[1] = 1;
      for (uint64_t n = 2; n <= limit; ++n) t.values[n] = spf[n];
      break;
    }
    case TableKind::moebius: {
      t.values[1] = 1;
      for (uint64_t n = 2; n <= limit; ++n) {
        if (spf_exp[n] > 1) {
          t.values[n] = 0;
        } else {
          t.values[n] = -t.values[n / spf[n]];
        }
      }
      break;
    }
    case TableKind::euler_phi: {
      t.values[1] = 1;
      for (uint64_t n = 2; n <= limit; ++n) {
        uint64_t p = spf[n];
        uint64_t pe = 1;
        for (uint32_t i = 0; i < spf_exp[n]; ++i) pe *= p;
        t.values[n] = checked_mul(t.values[n / pe], static_cast<int64_t>(pe / p * (p - 1)));
      }
      break;
    }
    case TableKind::tau_k: {
      t.values[1] = 1;
      for (uint64_t n = 2; n <= limit; ++n) {
        uint64_t p = spf[n];
        uint64_t pe = 1;
        for (uint32_t i = 0; i < spf_exp[n]; ++i) pe *= p;
        t.values[n] = checked_mul(t.values[n / pe], tau_prime_power(k, static_cast<int>(spf_exp[n])));
      }
      break;
    }
  }
  return t;
}

Factorization factorize(uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n = 0");
  Factorization f;
  f.n = n;
  for (uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    f.factors.emplace_back(p, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

Factorization factorize(uint64_t n, const ArithmeticTable& spf_table) {
  if (spf_table.kind != TableKind::smallest_prime_factor)
    throw std::invalid_argument("factorize: table is not a smallest_prime_factor table");
  if (n == 0 || n > spf_table.limit) throw std::domain_error("factorize: n outside table domain");
  Factorization f;
  f.n = n;
  while (n > 1) {
    uint64_t p = static_cast<uint64_t>(spf_table.values[n]);
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    f.factors.emplace_back(p, e);
  }
  return f;
}

std::vector<uint64_t> divisors(const Factorization& f) {
  std::vector<uint64_t> ds{1};
  for (const auto& [p, e] : f.factors) {
    size_t sz = ds.size();
    uint64_t pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<uint64_t> divisors(uint64_t n) { return divisors(factorize(n)); }

int64_t moebius(uint64_t n) {
  Factorization f = factorize(n);
  for (const auto& [p, e] : f.factors)
    if (e > 1) return 0;
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (const auto& [p, e] : factorize(n).factors) r = r / p * (p - 1);
  return r;
}

int v_p(uint64_t n, uint64_t p) {
  if (n == 0 || p < 2) throw std::domain_error("v_p: need n >= 1, p >= 2");
  int e = 0;
  while (n % p == 0) { n /= p; ++e; }
  return e;
}

int64_t ramanujan_sum(uint64_t r, int64_t m) {
  if (r == 0) throw std::domain_error("ramanujan_sum: r >= 1 required");
  uint64_t am = m < 0 ? static_cast<uint64_t>(-m) : static_cast<uint64_t>(m);
  uint64_t g = std::gcd(r, am);  // gcd(r, 0) = r
  uint64_t rg = r / g;
  int64_t mu = moebius(rg);
  if (mu == 0) return 0;
  // phi(r/g) | phi(r), so the quotient is an integer.
  return mu * static_cast<int64_t>(euler_phi(r) / euler_phi(rg));
}

mpq_class kappa(uint64_t m, uint64_t r) {
  if (m == 0 || r == 0 || r % m != 0) throw std::domain_error("kappa: m | r required");
  uint64_t rm = r / m;
  int64_t mu = moebius(rm);
  if (mu == 0) return mpq_class(0);
  mpq_class result(mu, static_cast<long>(euler_phi(rm)));
  result.canonicalize();
  for (const auto& [p, e] : factorize(m).factors) {
    if (e == v_p(r, p)) {
      // (1 - 1/p)^{-1} = p / (p-1)
      result *= mpq_class(static_cast<long>(p), static_cast<long>(p - 1));
    }
  }
  result.canonicalize();
  return result;
}

}  // namespace majorarcs
