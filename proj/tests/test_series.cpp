#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "majorarcs/series.hpp"
#include "oracles.hpp"

using namespace majorarcs;

namespace {

SeriesQ random_series(std::mt19937& rng, int min_deg, int width) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<mpq_class> c(width);
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  if (c[0] == 0) c[0] = 1;
  return SeriesQ(mpq_class(0), min_deg, std::move(c));
}

}  // namespace

TEST_CASE("series: polynomial product truncation") {
  // (1+x)(1-x) at order 2 -> 1 - x^2
  SeriesQ a(mpq_class(0), 0, {mpq_class(1), mpq_class(1), mpq_class(0)});
  SeriesQ b(mpq_class(0), 0, {mpq_class(1), mpq_class(-1), mpq_class(0)});
  SeriesQ p = a * b;
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);
  CHECK(p.max_degree() == 2);
}

TEST_CASE("series: exp and derivative") {
  SeriesQ x = SeriesQ::monomial(mpq_class(0), 1, mpq_class(1), 3);
  SeriesQ e = x.exp_series();
  CHECK(e.coeff(0) == 1);
  CHECK(e.coeff(1) == 1);
  CHECK(e.coeff(2) == mpq_class(1, 2));
  CHECK(e.coeff(3) == mpq_class(1, 6));

  SeriesQ d = e.derivative();
  CHECK(d.coeff(0) == 1);
  CHECK(d.coeff(1) == 1);
  CHECK(d.coeff(2) == mpq_class(1, 2));
  CHECK(d.max_degree() == 2);

  // Laurent derivative: d/dx (x^{-2} + x) = -2 x^{-3} + 1
  SeriesQ l(mpq_class(0), -2, {mpq_class(1), mpq_class(0), mpq_class(0), mpq_class(1)});
  SeriesQ ld = l.derivative();
  CHECK(ld.coeff(-3) == -2);
  CHECK(ld.coeff(0) == 1);
}

TEST_CASE("series: reciprocal") {
  // 1/(1-x) = 1 + x + x^2 + ...
  SeriesQ g(mpq_class(0), 0, {mpq_class(1), mpq_class(-1), mpq_class(0), mpq_class(0)});
  SeriesQ inv = g.reciprocal();
  for (int i = 0; i <= 3; ++i) CHECK(inv.coeff(i) == 1);

  // zero leading coefficient is singular
  SeriesQ z = SeriesQ::monomial(mpq_class(0), 1, mpq_class(1), 3);
  SeriesQ shifted(mpq_class(0), 0, {mpq_class(0), mpq_class(1), mpq_class(1)});
  CHECK_THROWS_AS(shifted.reciprocal(), std::domain_error);
  // but a monomial-led Laurent series inverts fine
  SeriesQ zi = z.reciprocal();
  CHECK(zi.min_degree() == -1);
  CHECK(zi.coeff(-1) == 1);
}

TEST_CASE("series: ring laws on random instances") {
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    int m1 = static_cast<int>(rng() % 5) - 2;
    int m2 = static_cast<int>(rng() % 5) - 2;
    int m3 = static_cast<int>(rng() % 5) - 2;
    SeriesQ a = random_series(rng, m1, 6);
    SeriesQ b = random_series(rng, m2, 6);
    SeriesQ c = random_series(rng, m3, 6);
    SeriesQ ab_c = (a * b) * c;
    SeriesQ a_bc = a * (b * c);
    for (int d = ab_c.min_degree(); d <= std::min(ab_c.max_degree(), a_bc.max_degree()); ++d)
      REQUIRE(ab_c.coeff(d) == a_bc.coeff(d));
    SeriesQ lhs = a * (b + c);
    SeriesQ rhs = a * b + a * c;
    for (int d = lhs.min_degree(); d <= std::min(lhs.max_degree(), rhs.max_degree()); ++d)
      REQUIRE(lhs.coeff(d) == rhs.coeff(d));
  }
}

TEST_CASE("series: scale_variable is multiplicative") {
  std::mt19937 rng(3);
  SeriesQ a = random_series(rng, 0, 5);
  SeriesQ b = random_series(rng, -1, 5);
  mpq_class alpha(3, 2);
  SeriesQ lhs = (a * b).scale_variable(alpha);
  SeriesQ rhs = a.scale_variable(alpha) * b.scale_variable(alpha);
  for (int d = lhs.min_degree(); d <= lhs.max_degree(); ++d) REQUIRE(lhs.coeff(d) == rhs.coeff(d));
}

TEST_CASE("zeta_laurent: pole, Stieltjes coefficients, pole cancellation") {
  PrecisionGuard guard(256);
  SeriesR z = zeta_laurent(6, 256);
  CHECK(z.coeff(-1) == 1);

  // gamma_0, gamma_1, gamma_2 against the independent Euler-Maclaurin oracle,
  // 30 significant digits
  Real tol = pow(Real(10), -30);
  Real g0 = oracles::stieltjes_euler_maclaurin(0);
  Real g1 = oracles::stieltjes_euler_maclaurin(1);
  Real g2 = oracles::stieltjes_euler_maclaurin(2);
  CHECK(abs(z.coeff(0) - g0) < tol * abs(g0));
  CHECK(abs(-z.coeff(1) - g1) < tol * abs(g1));       // coeff(1) = -gamma_1/1!
  CHECK(abs(z.coeff(2) * 2 - g2) < tol * abs(g2));    // coeff(2) = gamma_2/2!

  // zeta(s)(s-1) at s=1 -> 1
  SeriesR zx = z * SeriesR::monomial(mpq_class(1), 1, Real(1), 7);
  CHECK(zx.coeff(0) == 1);

  CHECK_THROWS_AS(zeta_laurent(13, 128), std::domain_error);
  CHECK_THROWS_AS(stieltjes_constant(13), std::domain_error);
}

TEST_CASE("zeta_kernel: first coefficients for k=2") {
  PrecisionGuard guard(128);
  // {zeta(s)(s-1)}^2/s = 1 + (2 gamma_0 - 1) X + ...
  SeriesR kern = zeta_kernel(2, 4, 128);
  double c0 = static_cast<double>(kern.coeff(0));
  double c1 = static_cast<double>(kern.coeff(1));
  double g0 = static_cast<double>(stieltjes_constant(0));
  CHECK(c0 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c1 == doctest::Approx(2 * g0 - 1).epsilon(1e-15));
}
