#include "majorarcs/approx.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>
#include <numeric>

namespace majorarcs {

namespace {

struct Kahan {
  double s = 0.0, c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// first n >= 1 with n ≡ a (mod q); for half_open additionally n > a
uint64_t first_in_class(uint64_t q, int64_t a, SumRange range) {
  if (range == SumRange::half_open && a >= 0) return static_cast<uint64_t>(a) + q;
  int64_t a0 = ((a % static_cast<int64_t>(q)) + static_cast<int64_t>(q)) % static_cast<int64_t>(q);
  return (a0 == 0) ? q : static_cast<uint64_t>(a0);
}

}  // namespace

FrEvaluator::FrEvaluator(const TaukModel& model, uint64_t R)
    : k_(model.k()), R_(R), basis_(model.basis()) {
  if (R < 1 || R > model.R()) throw std::domain_error("FrEvaluator: need 1 <= R <= model.R()");
  if (R > 4096) throw std::domain_error("FrEvaluator: residue tables are quadratic in R, capped at 4096");
  base_.resize(R + 1);
  hstar_.assign(k_, std::vector<double>(R + 1, 0.0));
  for (uint64_t r = 1; r <= R; ++r) {
    std::vector<uint64_t> ds = divisors(r);
    std::vector<double> w(ds.size());
    for (size_t i = 0; i < ds.size(); ++i) {
      uint64_t rg = r / ds[i];
      int64_t mu = moebius(rg);
      w[i] = (mu == 0) ? 0.0 : static_cast<double>(mu) / static_cast<double>(euler_phi(rg));
    }
    base_[r].resize(r);
    for (uint64_t t = 0; t < r; ++t) {
      uint64_t g = std::gcd(r, t);  // gcd(r,0) = r
      size_t i = std::lower_bound(ds.begin(), ds.end(), g) - ds.begin();
      base_[r][t] = w[i];
    }
    for (int j = 0; j < k_; ++j) hstar_[j][r] = model.h_star_d(j, r);
  }
}

double FrEvaluator::operator()(uint64_t n) const {
  if (n == 0) return 0.0;
  double acc = 0.0;
  for (int j = 0; j < k_; ++j) {
    double w = 0.0;
    for (uint64_t r = 1; r <= R_; ++r) w += hstar_[j][r] * base_[r][n % r];
    acc += basis_.u(j, static_cast<double>(n)) * w;
  }
  return acc;
}

std::vector<double> FrEvaluator::sweep(uint64_t x, int threads) const {
  std::vector<double> out(x + 1, 0.0);
  // per-class coefficient accumulation in block-local buffers, then the
  // u_j(n) combination; each n is owned by exactly one block, so results do
  // not depend on the thread count
  constexpr uint64_t kBlock = 1u << 16;
  const uint64_t nblocks = (x + kBlock) / kBlock;

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::vector<double>> coef(k_, std::vector<double>(kBlock, 0.0));
#pragma omp for schedule(static)
    for (int64_t blk = 0; blk < static_cast<int64_t>(nblocks); ++blk) {
      uint64_t lo = std::max<uint64_t>(1, static_cast<uint64_t>(blk) * kBlock);
      uint64_t hi = std::min(x, (static_cast<uint64_t>(blk) + 1) * kBlock - 1);
      if (lo > hi) continue;
      for (int j = 0; j < k_; ++j) std::fill(coef[j].begin(), coef[j].begin() + (hi - lo + 1), 0.0);
      for (uint64_t r = 1; r <= R_; ++r) {
        const double* b = base_[r].data();
        uint64_t t = lo % r;
        for (uint64_t n = lo; n <= hi; ++n) {
          double w = b[t];
          if (++t == r) t = 0;
          if (w == 0.0) continue;
          for (int j = 0; j < k_; ++j) coef[j][n - lo] += hstar_[j][r] * w;
        }
      }
      for (uint64_t n = lo; n <= hi; ++n) {
        double acc = 0.0;
        for (int j = 0; j < k_; ++j) acc += basis_.u(j, static_cast<double>(n)) * coef[j][n - lo];
        out[n] = acc;
      }
    }
  }
  return out;
}

ApproximationContext::ApproximationContext(const TaukModel& m, const ArithmeticTable& t, uint64_t x_,
                                           uint64_t R_)
    : model(&m), table(&t), x(x_), R(R_) {
  if (R > m.R()) throw std::domain_error("ApproximationContext: R beyond model bound");
  if (x > t.limit) throw std::domain_error("ApproximationContext: x beyond table limit");
  if (t.kind != TableKind::tau_k || t.k != m.k())
    throw std::domain_error("ApproximationContext: table and model disagree on k");
}

double rho_sum(const FrEvaluator& fr, uint64_t x, uint64_t q, int64_t a, SumRange range) {
  if (q == 0) throw std::domain_error("rho_sum: q >= 1");
  Kahan acc;
  for (uint64_t n = first_in_class(q, a, range); n <= x; n += q) acc.add(fr(n));
  return acc.s;
}

double rho_sum(const std::vector<double>& fr_table, uint64_t x, uint64_t q, int64_t a, SumRange range) {
  if (q == 0) throw std::domain_error("rho_sum: q >= 1");
  if (x + 1 > fr_table.size()) throw std::domain_error("rho_sum: x beyond table");
  Kahan acc;
  for (uint64_t n = first_in_class(q, a, range); n <= x; n += q) acc.add(fr_table[n]);
  return acc.s;
}

double g_weight(const TaukModel& model, int j, uint64_t q, int64_t a) {
  if (q == 0) throw std::domain_error("g_weight: q >= 1");
  if (q > model.R()) throw std::domain_error("g_weight: q beyond model bound");
  uint64_t aa = a < 0 ? static_cast<uint64_t>(-a) : static_cast<uint64_t>(a);
  uint64_t g = std::gcd(q, aa);  // gcd(q,0) = q
  uint64_t qg = q / g;
  double acc = 0.0;
  for (uint64_t d : divisors(qg)) {
    int64_t mu = moebius(d);
    if (mu == 0) continue;
    acc += static_cast<double>(mu) * model.h_d(j, g * d) / static_cast<double>(g * d);
  }
  return acc / static_cast<double>(euler_phi(qg));
}

IdentityPair divisor_identity_sides(const TaukModel& model, uint64_t s, int64_t a, int j) {
  if (s == 0 || s > model.R()) throw std::domain_error("divisor_identity_sides: need 1 <= s <= model.R()");
  uint64_t aa = a < 0 ? static_cast<uint64_t>(-a) : static_cast<uint64_t>(a);
  double lhs = 0.0;
  for (uint64_t r : divisors(s)) {
    uint64_t g = std::gcd(r, aa);
    uint64_t rg = r / g;
    int64_t mu = moebius(rg);
    if (mu == 0) continue;
    lhs += model.h_star_d(j, r) * static_cast<double>(mu) / static_cast<double>(euler_phi(rg));
  }
  double rhs = static_cast<double>(s) * g_weight(model, j, s, a);
  return IdentityPair{lhs, rhs};
}

std::complex<double> exponential_sum(const ArithmeticTable& f, uint64_t x, uint64_t b, uint64_t r) {
  if (r == 0) throw std::domain_error("exponential_sum: r >= 1");
  if (x > f.limit) throw std::domain_error("exponential_sum: x beyond table limit");
  // e(t/r) table for one period
  std::vector<double> re(r), im(r);
  for (uint64_t t = 0; t < r; ++t) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(r);
    re[t] = std::cos(ang);
    im[t] = std::sin(ang);
  }
  Kahan sre, sim;
  uint64_t t = 0;
  uint64_t step = b % r;
  for (uint64_t n = 1; n <= x; ++n) {
    t += step;
    if (t >= r) t -= r;
    double fn = static_cast<double>(f.values[n]);
    sre.add(fn * re[t]);
    sim.add(fn * im[t]);
  }
  return {sre.s, sim.s};
}

std::complex<double> discrepancy_sum(const ArithmeticTable& f, uint64_t x, uint64_t b, uint64_t r) {
  std::complex<double> ef = exponential_sum(f, x, b, r);
  double phi_r = static_cast<double>(euler_phi(r));
  double main = 0.0;
  for (uint64_t m : divisors(r)) {
    int64_t mu = moebius(r / m);
    if (mu == 0) continue;
    main += static_cast<double>(mu) * static_cast<double>(m) / phi_r *
            divisor_class_sum(f, static_cast<double>(x), m);
  }
  return ef - std::complex<double>(main, 0.0);
}

std::complex<double> discrepancy_sum_direct(const ArithmeticTable& f, uint64_t x, uint64_t b, uint64_t r) {
  if (r == 0) throw std::domain_error("discrepancy_sum_direct: r >= 1");
  if (x > f.limit) throw std::domain_error("discrepancy_sum_direct: x beyond table limit");
  // class sums A(x;r,c) and the gcd-class sums T(g) = sum_{(n,r)=g} f(n)
  std::vector<double> cls(r, 0.0);
  for (uint64_t n = 1; n <= x; ++n) cls[n % r] += static_cast<double>(f.values[n]);
  std::vector<uint64_t> ds = divisors(r);
  std::vector<double> tg(ds.size(), 0.0);
  std::vector<double> phi_rg(ds.size(), 0.0);
  for (size_t i = 0; i < ds.size(); ++i) phi_rg[i] = static_cast<double>(euler_phi(r / ds[i]));
  auto dindex = [&](uint64_t g) {
    return static_cast<size_t>(std::lower_bound(ds.begin(), ds.end(), g) - ds.begin());
  };
  for (uint64_t c = 0; c < r; ++c) {
    uint64_t g = std::gcd(r, c);
    tg[dindex(g)] += cls[c];
  }
  std::vector<double> re(r), im(r);
  for (uint64_t t = 0; t < r; ++t) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(r);
    re[t] = std::cos(ang);
    im[t] = std::sin(ang);
  }
  Kahan sre, sim;
  for (uint64_t c = 1; c <= r; ++c) {
    uint64_t g = std::gcd(r, c % r);  // gcd(r,0) = r for the c = r term
    size_t gi = dindex(g);
    double bracket = cls[c % r] - tg[gi] / phi_rg[gi];
    uint64_t t = (b % r) * (c % r) % r;
    sre.add(bracket * re[t]);
    sim.add(bracket * im[t]);
  }
  return {sre.s, sim.s};
}

double corollary_bv_residual(const TaukModel& model, const ArithmeticTable& f, uint64_t x, int64_t a,
                             uint64_t q_max) {
  if (x > f.limit) throw std::domain_error("corollary_bv_residual: x beyond table limit");
  if (q_max > model.R()) throw std::domain_error("corollary_bv_residual: q_max beyond model bound");
  std::vector<double> U(model.k());
  for (int j = 0; j < model.k(); ++j) U[j] = model.basis().U(j, static_cast<double>(x));
  double total = 0.0;
  for (uint64_t q = 1; q <= q_max; ++q) {
    Kahan acc;
    for (uint64_t n = first_in_class(q, a, SumRange::closed); n <= x; n += q)
      acc.add(static_cast<double>(f.values[n]));
    double main = 0.0;
    for (int j = 0; j < model.k(); ++j) main += g_weight(model, j, q, a) * U[j];
    total += std::abs(acc.s - main);
  }
  return total;
}

}  // namespace majorarcs
