#include "majorarcs/series.hpp"

namespace majorarcs {

namespace {

// Stieltjes constants gamma_0..gamma_12, 60+ significant digits. Pinned from
// standard tables; gamma_0..gamma_2 are cross-checked in the test suite by an
// independent Euler-Maclaurin evaluation to 30 digits.
const char* kStieltjes[] = {
    "0.57721566490153286060651209008240243104215933593992359880576723",
    "-0.072815845483676724860586375874901319137736338334337952599006560",
    "-0.0096903631928723184845303860352125293590658061013407498807013655",
    "0.0020538344203033458661600465427533842857158044454106182454814833",
    "0.0023253700654673000574681701775260680009044694137848509907580409",
    "0.00079332381730106270175333487744444483073153940458488707573425627",
    "-0.00023876934543019960987242184190800427778371515635807863147642531",
    "-0.00052728956705775104607409750547885828199625347296989533101340423",
    "-0.00035212335380303950960205216500120874172918053379235035665733151",
    "-0.000034394774418088048177914623798227390620789538594441629759291905",
    "0.00020533281490906479468372228923706530295985377416676430384020871",
    "0.00027018443954390352667290208206795567382784205868840250397373580",
    "0.00016727291210514019335350154334118344660780663280556582804779094",
};

}  // namespace

int max_stieltjes_order() { return static_cast<int>(std::size(kStieltjes)) - 1; }

Real stieltjes_constant(int n) {
  if (n < 0 || n > max_stieltjes_order())
    throw std::domain_error("stieltjes_constant: order beyond pinned table (0..12)");
  return Real(kStieltjes[n]);
}

SeriesR zeta_laurent(int order, unsigned precision_bits) {
  if (order < 0) throw std::domain_error("zeta_laurent: negative order");
  if (order > max_stieltjes_order())
    throw std::domain_error("zeta_laurent: order beyond Stieltjes table bound (12)");
  PrecisionGuard guard(precision_bits);
  std::vector<Real> c(order + 2, Real(0));
  c[0] = Real(1);  // residue of the simple pole at s=1
  Real fact(1), sign(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= n;
    c[n + 1] = sign * stieltjes_constant(n) / fact;
    sign = -sign;
  }
  return SeriesR(mpq_class(1), -1, std::move(c));
}

SeriesR zeta_kernel(int k, int order, unsigned precision_bits) {
  if (k < 1) throw std::domain_error("zeta_kernel: k >= 1");
  PrecisionGuard guard(precision_bits);
  // zeta(s)(s-1) = 1 + sum_{n>=0} (-1)^n gamma_n X^{n+1} / n!
  SeriesR zx = zeta_laurent(order, precision_bits) *
               SeriesR::monomial(mpq_class(1), 1, Real(1), order + 1);
  SeriesR pk = zx.pow(k);
  // 1/s = 1/(1+X) = sum (-1)^n X^n
  std::vector<Real> inv(order + 1);
  for (int n = 0; n <= order; ++n) inv[n] = Real((n % 2) ? -1 : 1);
  return pk * SeriesR(mpq_class(1), 0, std::move(inv));
}

}  // namespace majorarcs
