#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "majorarcs/arith.hpp"
#include "majorarcs/table_io.hpp"
#include "oracles.hpp"

using namespace majorarcs;

namespace {

// divisor-count oracle: tau_2 by trial division
int64_t tau2_direct(uint64_t n) {
  int64_t c = 0;
  for (uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) c += (d * d == n) ? 1 : 2;
  return c;
}

// tau_3 as the number of ordered triples with product n
int64_t tau3_direct(uint64_t n) {
  int64_t c = 0;
  for (uint64_t a = 1; a <= n; ++a) {
    if (n % a) continue;
    c += tau2_direct(n / a);
  }
  return c;
}

}  // namespace

TEST_CASE("sieve: tau_2 and tau_3 against brute force") {
  auto t2 = sieve(TableKind::tau_k, 5000, 2);
  CHECK(t2(6) == 4);
  for (uint64_t n = 1; n <= 5000; ++n) REQUIRE(t2(n) == tau2_direct(n));

  auto t3 = sieve(TableKind::tau_k, 500, 3);
  CHECK(t3(4) == 6);  // ordered triples with product 4
  for (uint64_t n = 1; n <= 500; ++n) REQUIRE(t3(n) == tau3_direct(n));
}

TEST_CASE("sieve: tau_k = tau_{k-1} * 1 up to 10^4") {
  for (int k = 2; k <= 4; ++k) {
    auto tk = sieve(TableKind::tau_k, 10000, k);
    auto tkm1 = sieve(TableKind::tau_k, 10000, k - 1);
    for (uint64_t n = 1; n <= 10000; ++n) {
      int64_t conv = 0;
      for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        conv += tkm1(d);
        if (d * d != n) conv += tkm1(n / d);
      }
      REQUIRE(tk(n) == conv);
    }
  }
}

TEST_CASE("sieve: multiplicativity and prime powers") {
  auto t4 = sieve(TableKind::tau_k, 100000, 4);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<uint64_t> dist(2, 300);
  for (int trial = 0; trial < 2000; ++trial) {
    uint64_t m = dist(rng), n = dist(rng);
    if (std::gcd(m, n) != 1 || m * n > t4.limit) continue;
    REQUIRE(t4(m * n) == t4(m) * t4(n));
  }
  // tau_k(p^v) = C(v+k-1, k-1)
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    uint64_t pv = p;
    int v = 1;
    while (pv <= t4.limit) {
      REQUIRE(t4(pv) == binomial_checked(v + 3, 3));
      pv *= p;
      ++v;
    }
  }
  CHECK(t4(1) == 1);
}

TEST_CASE("sieve: moebius and euler_phi tables") {
  auto mu = sieve(TableKind::moebius, 2000);
  auto phi = sieve(TableKind::euler_phi, 2000);
  CHECK(mu(12) == 0);  // square factor
  CHECK(mu(1) == 1);
  CHECK(phi(1) == 1);
  for (uint64_t n = 1; n <= 2000; ++n) {
    REQUIRE(mu(n) == moebius(n));
    REQUIRE(static_cast<uint64_t>(phi(n)) == euler_phi(n));
  }
}

TEST_CASE("sieve: errors") {
  CHECK_THROWS_AS(sieve(TableKind::tau_k, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(sieve(TableKind::tau_k, 10, 0), std::invalid_argument);
  // tau_64(2^20) = C(83,63) overflows 64 bits; must throw, never wrap
  CHECK_THROWS_AS(sieve(TableKind::tau_k, 1 << 20, 64), std::overflow_error);
  CHECK_THROWS_AS(binomial_checked(130, 65), std::overflow_error);
}

TEST_CASE("factorize and divisors") {
  auto spf = sieve(TableKind::smallest_prime_factor, 10000);
  for (uint64_t n : {1ull, 2ull, 60ull, 9973ull, 9800ull}) {
    auto f1 = factorize(n);
    auto f2 = factorize(n, spf);
    REQUIRE(f1.factors == f2.factors);
    uint64_t prod = 1;
    for (auto [p, e] : f1.factors)
      for (int i = 0; i < e; ++i) prod *= p;
    REQUIRE(prod == n);
  }
  CHECK(divisors(60) == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
}

TEST_CASE("ramanujan_sum: pinned examples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) CHECK(ramanujan_sum(1, static_cast<int64_t>(rng() % 1000) - 500) == 1);
  CHECK(ramanujan_sum(4, 2) == -2);
  CHECK(ramanujan_sum(5, 3) == -1);
  for (uint64_t r : {1ull, 2ull, 6ull, 12ull, 97ull})
    CHECK(ramanujan_sum(r, 0) == static_cast<int64_t>(euler_phi(r)));
}

TEST_CASE("ramanujan_sum: exponential-sum oracle, all r <= 500, m in [-r, r]") {
  for (uint64_t r = 1; r <= 500; ++r) {
    // one period of e(a/r) for table lookups in the oracle
    std::vector<double> re(r), im(r);
    for (uint64_t t = 0; t < r; ++t) {
      double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(r);
      re[t] = std::cos(ang);
      im[t] = std::sin(ang);
    }
    std::vector<uint64_t> coprime;
    for (uint64_t a = 1; a <= r; ++a)
      if (std::gcd(a, r) == 1) coprime.push_back(a);
    for (int64_t m = -static_cast<int64_t>(r); m <= static_cast<int64_t>(r); ++m) {
      double sre = 0.0, sim = 0.0;
      uint64_t mm = static_cast<uint64_t>(((m % static_cast<int64_t>(r)) + static_cast<int64_t>(r))) % r;
      for (uint64_t a : coprime) {
        uint64_t t = mm * a % r;
        sre += re[t];
        sim += im[t];
      }
      REQUIRE(std::abs(sre - static_cast<double>(ramanujan_sum(r, m))) < 1e-9);
      REQUIRE(std::abs(sim) < 1e-9);
    }
  }
}

TEST_CASE("kappa: pinned examples and closed form vs double sum") {
  CHECK(kappa(1, 6) == mpq_class(1, 2));
  CHECK(kappa(2, 2) == mpq_class(2));
  CHECK(kappa(2, 4) == mpq_class(-1));
  CHECK_THROWS_AS(kappa(3, 4), std::domain_error);

  std::vector<int64_t> mu(201), phi(201);
  for (uint64_t n = 1; n <= 200; ++n) {
    mu[n] = moebius(n);
    phi[n] = static_cast<int64_t>(euler_phi(n));
  }
  for (uint64_t r = 1; r <= 200; ++r)
    for (uint64_t m = 1; m <= r; ++m) {
      if (r % m) continue;
      REQUIRE(kappa(m, r) == oracles::kappa_double_sum(m, r, mu, phi));
    }
}

TEST_CASE("kappa: sum_{m|r} |kappa(m,r)| <= 4 (r/phi(r))^2 for r <= 10^4") {
  // measured constant; the source bound is << (r/phi(r))^2
  for (uint64_t r = 1; r <= 10000; ++r) {
    mpq_class sum(0);
    for (uint64_t m : divisors(r)) sum += abs(kappa(m, r));
    mpq_class ratio(static_cast<unsigned long>(r), static_cast<unsigned long>(euler_phi(r)));
    ratio.canonicalize();
    REQUIRE(sum <= 4 * ratio * ratio);
  }
}

TEST_CASE("moebius_transform: examples and missing-divisor error") {
  std::map<uint64_t, int64_t> one{{1, 1}, {2, 1}, {3, 1}, {6, 1}};
  CHECK(moebius_transform(one, 6) == 0);

  std::map<uint64_t, int64_t> id{{1, 1}, {2, 2}, {4, 4}};
  CHECK(moebius_transform(id, 4) == 2);  // phi(4)

  auto t2 = sieve(TableKind::tau_k, 100, 2);
  for (uint64_t p : {2ull, 3ull, 31ull, 97ull}) {
    std::map<uint64_t, int64_t> g{{1, t2(1)}, {p, t2(p)}};
    CHECK(moebius_transform(g, p) == 1);  // tau_2(p) - tau_2(1) = tau_1(p)
  }

  std::map<uint64_t, int64_t> missing{{1, 1}, {6, 1}};
  CHECK_THROWS_AS(moebius_transform(missing, 6), std::domain_error);
}

TEST_CASE("table dump/load round trip") {
  auto t = sieve(TableKind::tau_k, 1000, 3);
  std::string path = "malb_test_table.bin";
  dump_table(t, path);
  auto back = load_table(path);
  CHECK(back.kind == t.kind);
  CHECK(back.k == t.k);
  CHECK(back.limit == t.limit);
  CHECK(back.values == t.values);
  std::remove(path.c_str());

  // bad magic
  {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    std::fputs("NOTAMAGIC", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(load_table(path), std::runtime_error);
  std::remove(path.c_str());
}
