#include "majorarcs/residues.hpp"

#include <stdexcept>

#include "majorarcs/arith.hpp"

namespace majorarcs {

namespace {

using MSQ = MultiSeries3<mpq_class>;
using MSP = MultiSeries3<PolyQ>;

mpq_class inv_factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return mpq_class(1) / mpq_class(f);
}

// C(-n, m) = (-1)^m C(n+m-1, m)
mpq_class binom_negative(unsigned n, unsigned m) {
  mpq_class b(binomial_mpz(n + m - 1, m));
  return (m % 2) ? -b : b;
}

}  // namespace

mpq_class residue_cjj(int k, int j, int j2) {
  if (k < 2 || k > 8) throw std::domain_error("residue_cjj: supported range is 2 <= k <= 8");
  if (j < 0 || j >= k || j2 < 0 || j2 >= k) throw std::domain_error("residue_cjj: need 0 <= j, j' < k");
  const int k2 = k * k;
  const int s_hi = k2 + j + j2 + 2;  // e^s order needed to reach the s^{-1} coefficient
  MSQ::Box box{-(k2 + j + j2 + 3), s_hi, j, j2};

  // e^s / s^2
  MSQ acc(box);
  for (int i = 0; i <= s_hi + 2; ++i) acc.add_term(i - 2, 0, 0, inv_factorial(i));

  // (s+s1)^k and (s+s2)^k
  MSQ f1(box), f2(box);
  for (int i = 0; i <= k; ++i) {
    mpq_class b(binomial_mpz(k, i));
    f1.add_term(k - i, i, 0, b);
    f2.add_term(k - i, 0, i, b);
  }

  // (s+s1+s2)^{-k^2} = sum_m C(-k^2, m) (s1+s2)^m s^{-k^2-m}, |s1|,|s2| << |s|
  MSQ g(box);
  for (int m = 0; m <= j + j2 + 1; ++m) {
    mpq_class bm = binom_negative(k2, m);
    for (int a = 0; a <= m; ++a)
      g.add_term(-k2 - m, a, m - a, bm * mpq_class(binomial_mpz(m, a)));
  }

  MSQ prod = acc * f1 * f2 * g;
  return prod.coeff(-1, j, j2);
}

ResiduePolynomial assemble_pk(int k) {
  if (k < 2 || k > 8) throw std::domain_error("assemble_pk: supported range is 2 <= k <= 8");
  mpz_class k2m1_fact;
  mpz_fac_ui(k2m1_fact.get_mpz_t(), k * k - 1);
  PolyQ p;
  for (int j = 0; j < k; ++j) {
    for (int j2 = 0; j2 < k; ++j2) {
      mpz_class d1, d2;
      mpz_fac_ui(d1.get_mpz_t(), k - j - 1);
      mpz_fac_ui(d2.get_mpz_t(), k - j2 - 1);
      mpq_class c = residue_cjj(k, j, j2) * mpq_class(k2m1_fact) / mpq_class(d1 * d2);
      p += PolyQ::monomial(j + j2, c);
    }
  }
  ResiduePolynomial rp{"v", std::move(p),
                       "Res_{s=0} Res_{s1,s2=0} of e^s (s+s1)^k (s+s2)^k / (s1^{j+1} s2^{j'+1} s^2 (s+s1+s2)^{k^2})"};
  if (rp.degree() != 2 * k - 2) throw std::logic_error("assemble_pk: degree is not 2k-2");
  return rp;
}

ResiduePolynomial gamma_k_polynomial(int k, GammaKForm form) {
  if (k < 2 || k > 6) throw std::domain_error("gamma_k_polynomial: supported range is 2 <= k <= 6");
  const int k2 = k * k;
  const int D = (form == GammaKForm::z_squared) ? 2 : k2;
  const int wmax = 2 * k - 2;          // joint degree in (s1, s2) that can matter
  const int z_hi = D + k2 + 2 * k;     // exponential order needed in z
  MSP::Box box{-(D + k2 + wmax + 1), z_hi, k - 1, k - 1};

  // e^z e^{-cz} = sum_i (1-c)^i z^i / i!   (coefficients are polynomials in c)
  MSP ez(box);
  {
    PolyQ one_minus_c = PolyQ(mpq_class(1)) - PolyQ::monomial(1);
    PolyQ pw(mpq_class(1));
    for (int i = 0; i <= z_hi; ++i) {
      ez.add_term(i, 0, 0, pw * inv_factorial(i));
      pw = pw * one_minus_c;
    }
  }

  // e^{c s1} and e^{c s2}
  MSP e1(box), e2(box);
  for (int i = 0; i <= k - 1; ++i) {
    PolyQ ci = PolyQ::monomial(i) * inv_factorial(i);
    e1.add_term(0, i, 0, ci);
    e2.add_term(0, 0, i, ci);
  }

  // (s1-z)^k and (s2-z)^k, s1/s2 exponents capped at k-1 by the box
  MSP f1(box), f2(box);
  for (int i = 0; i <= k; ++i) {
    mpq_class b(binomial_mpz(k, i));
    if ((k - i) % 2) b = -b;
    f1.add_term(k - i, i, 0, PolyQ(b));
    f2.add_term(k - i, 0, i, PolyQ(b));
  }

  // (s1+s2-z)^{-k^2} = (-1)^{k^2} sum_m C(k^2+m-1, m) (s1+s2)^m z^{-k^2-m},
  // expanded in |s1+s2| < |z|
  MSP g(box);
  for (int m = 0; m <= wmax; ++m) {
    mpq_class bm(binomial_mpz(k2 + m - 1, m));
    if (k2 % 2) bm = -bm;
    for (int a = 0; a <= m; ++a)
      g.add_term(-k2 - m, a, m - a, PolyQ(bm * mpq_class(binomial_mpz(m, a))));
  }

  // z^{-D}
  MSP zd(box);
  zd.add_term(-D, 0, 0, PolyQ(mpq_class(1)));

  MSP prod = ez * e1 * e2 * f1 * f2 * g * zd;
  PolyQ rk = prod.coeff(-1, k - 1, k - 1);

  PolyQ gamma = rk + PolyQ::monomial(k2 - 1, inv_factorial(k2 - 1));
  const char* note = (form == GammaKForm::z_squared)
                         ? "Res_{z=0} Res_{s1,s2=0} of e^z e^{c(s1+s2-z)} (s1-z)^k (s2-z)^k / (z^2 s1^k s2^k (s1+s2-z)^{k^2}) plus c^{k^2-1}/(k^2-1)!"
                         : "same integrand with z^{k^2} in the denominator";
  return ResiduePolynomial{"c", std::move(gamma), note};
}

PolyQ gamma_reflection(const ResiduePolynomial& gamma_k, int k) {
  const int k2m1 = k * k - 1;
  if (gamma_k.degree() > k2m1)
    throw std::domain_error("gamma_reflection: deg gamma_k exceeds k^2-1, substitution is not polynomial");
  // (1-v)^{k^2-1} gamma(1/(1-v)) = sum_i g_i (1-v)^{k^2-1-i}
  PolyQ one_minus_v = PolyQ(mpq_class(1)) - PolyQ::monomial(1);
  PolyQ r;
  for (int i = 0; i <= gamma_k.degree(); ++i) {
    mpq_class gi = gamma_k.coeff(i);
    if (gi == 0) continue;
    r += one_minus_v.pow(k2m1 - i) * gi;
  }
  return r;
}

GammaIdentity gamma_identity_check(int k, GammaKForm form) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k * k - 1);
  PolyQ pk = assemble_pk(k).poly;
  PolyQ lhs = (PolyQ(mpq_class(1)) - PolyQ::monomial((k - 1) * (k - 1)) * pk) * (mpq_class(1) / mpq_class(f));
  PolyQ rhs;
  try {
    rhs = gamma_reflection(gamma_k_polynomial(k, form), k);
  } catch (const std::domain_error&) {
    // non-polynomial substitution: leave rhs = 0, identity fails
  }
  return GammaIdentity{std::move(lhs), std::move(rhs)};
}

}  // namespace majorarcs
