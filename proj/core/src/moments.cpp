#include "majorarcs/moments.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <chrono>
#include <cmath>

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

uint64_t first_in_class(uint64_t q, int64_t a, SumRange range) {
  if (range == SumRange::half_open && a >= 0) return static_cast<uint64_t>(a) + q;
  int64_t a0 = ((a % static_cast<int64_t>(q)) + static_cast<int64_t>(q)) % static_cast<int64_t>(q);
  return (a0 == 0) ? q : static_cast<uint64_t>(a0);
}

}  // namespace

double progression_count(const ArithmeticTable& f, uint64_t x, uint64_t q, int64_t a, SumRange range) {
  if (q == 0) throw std::domain_error("progression_count: q >= 1");
  if (x > f.limit) throw std::domain_error("progression_count: x beyond table limit");
  Kahan acc;
  for (uint64_t n = first_in_class(q, a, range); n <= x; n += q) acc.add(static_cast<double>(f.values[n]));
  return acc.s;
}

FirstMomentResult first_moment(const ArithmeticTable& f, const std::vector<double>& delta,
                               const ArithmeticTable& spf, uint64_t x, uint64_t N, int64_t a) {
  if (N < 1) throw std::domain_error("first_moment: N >= 1");
  if (!(static_cast<double>(-(static_cast<int64_t>(x))) / static_cast<double>(N) < static_cast<double>(a) &&
        a <= static_cast<int64_t>(x)))
    throw std::domain_error("first_moment: a outside (-x/N, x]");
  if (delta.size() < x + 1) throw std::domain_error("first_moment: delta table too short");
  uint64_t dmax = a < 0 ? x + static_cast<uint64_t>(-a) : x;
  if (spf.kind != TableKind::smallest_prime_factor || spf.limit < dmax)
    throw std::domain_error("first_moment: spf table must cover x + |a|");

  FirstMomentResult out;
  Kahan m1, m1t, mass;
  // q > x/N <=> q N > x, checked in integers
  for (uint64_t n = 1; n <= x; ++n) {
    int64_t D = static_cast<int64_t>(n) - a;
    if (D <= 0) continue;  // range cut a < n
    uint64_t big = 0, small = 0;
    for (uint64_t q : divisors(factorize(static_cast<uint64_t>(D), spf))) {
      if (q <= N) ++small;
      if (q * N > x && q <= x) ++big;
    }
    if (big) {
      m1.add(delta[n] * static_cast<double>(big));
      mass.add(static_cast<double>(f.values[n]) * static_cast<double>(big));
    }
    if (small) m1t.add(delta[n] * static_cast<double>(small));
  }
  out.m1 = m1.s;
  out.m1_tilde = m1t.s;
  out.a_star_mass = mass.s;
  return out;
}

FirstMomentResult first_moment_direct(const ArithmeticTable& f, const std::vector<double>& delta,
                                      uint64_t x, uint64_t N, int64_t a) {
  if (delta.size() < x + 1) throw std::domain_error("first_moment_direct: delta table too short");
  FirstMomentResult out;
  Kahan m1, m1t, mass;
  for (uint64_t q = 1; q <= x; ++q) {
    bool in_big = q * N > x;  // q > x/N
    bool in_small = q <= N;
    if (!in_big && !in_small) continue;
    Kahan s;
    Kahan fm;
    for (uint64_t n = first_in_class(q, a, SumRange::half_open); n <= x; n += q) {
      s.add(delta[n]);
      fm.add(static_cast<double>(f.values[n]));
    }
    if (in_big) {
      m1.add(s.s);
      mass.add(fm.s);
    }
    if (in_small) m1t.add(s.s);
  }
  out.m1 = m1.s;
  out.m1_tilde = m1t.s;
  out.a_star_mass = mass.s;
  return out;
}

double sigma_weight(const TaukModel& model, int j, uint64_t R) {
  if (R > model.R()) throw std::domain_error("sigma_weight: R beyond model bound");
  double acc = 0.0;
  for (uint64_t r = 1; r <= R; ++r)
    acc += std::abs(model.h_star_d(j, r)) * static_cast<double>(r) / static_cast<double>(euler_phi(r));
  return acc;
}

double u_star(const TaukModel& model, double x, uint64_t R, int order) {
  if (order != 1 && order != 2) throw std::domain_error("u_star: order is 1 or 2");
  if (R > model.R()) throw std::domain_error("u_star: R beyond model bound");
  double acc = 0.0;
  for (int j = 0; j < model.k(); ++j) {
    double inner = 0.0;
    for (uint64_t r = 1; r <= R; ++r) {
      double rr = static_cast<double>(r);
      double ph = static_cast<double>(euler_phi(r));
      double w = (order == 1) ? rr / ph : rr * rr / (ph * ph);
      inner += std::abs(model.h_star_d(j, r)) * w;
    }
    acc += (std::abs(model.basis().u(j, x)) + 1.0) * inner;
  }
  return acc;
}

double class_square_sum(const std::vector<double>& delta, uint64_t x, uint64_t q) {
  std::vector<double> cls(q, 0.0);
  uint64_t t = 1 % q;
  for (uint64_t n = 1; n <= x; ++n) {
    cls[t] += delta[n];
    if (++t == q) t = 0;
  }
  Kahan acc;
  for (uint64_t i = 0; i < q; ++i) acc.add(cls[i] * cls[i]);
  return acc.s;
}

double moment_tail_sum(const std::vector<double>& delta, uint64_t x, double N) {
  Kahan acc;
  for (uint64_t q = 1; q <= x; ++q) {
    if (static_cast<double>(q) * N > static_cast<double>(x))  // q > x/N
      acc.add(class_square_sum(delta, x, q));
  }
  return acc.s;
}

double fr_norm_theory(const TaukModel& model, double x, uint64_t R) {
  if (R > model.R()) throw std::domain_error("fr_norm_theory: R beyond model bound");
  int k = model.k();
  double acc = 0.0;
  for (uint64_t r = 1; r <= R; ++r) {
    double inner = 0.0;
    for (int j = 0; j < k; ++j) {
      for (int j2 = 0; j2 < k; ++j2) {
        int m = (k - 1 - j) + (k - 1 - j2);
        double fj = 1.0, fj2 = 1.0;
        for (int i = 2; i <= k - 1 - j; ++i) fj *= i;
        for (int i = 2; i <= k - 1 - j2; ++i) fj2 *= i;
        inner += model.h_star_d(j, r) * model.h_star_d(j2, r) * integral_log_power(m, x) / (fj * fj2);
      }
    }
    acc += inner / static_cast<double>(euler_phi(r));
  }
  return acc;
}

double delta_norm_theory(const TaukModel& model, double x, uint64_t R, double norm_f_sq) {
  return norm_f_sq - fr_norm_theory(model, x, R);
}

VarianceReport variance(const ArithmeticTable& f, const TaukModel& model, uint64_t x, uint64_t N,
                        uint64_t R, int threads) {
  if (N < 1 || x / (2 * N) < 1) throw std::domain_error("variance: need N >= 1 and x/2N >= 1");
  if (x > f.limit) throw std::domain_error("variance: x beyond table limit");
  auto t0 = std::chrono::steady_clock::now();

  VarianceReport rep;
  rep.k = model.k();
  rep.x = x;
  rep.N = N;
  rep.R = R;

  FrEvaluator fr(model, R);
  std::vector<double> frv = fr.sweep(x, threads);

  // Eq-M2DELTA bookkeeping in fixed blocks (thread-count independent)
  {
    constexpr uint64_t kBlock = 1u << 16;
    Kahan nf, nF, cr, nd;
    for (uint64_t lo = 1; lo <= x; lo += kBlock) {
      uint64_t hi = std::min(x, lo + kBlock - 1);
      Kahan bf, bF, bc, bd;
      for (uint64_t n = lo; n <= hi; ++n) {
        double fv = static_cast<double>(f.values[n]);
        double Fv = frv[n];
        double dv = fv - Fv;
        bf.add(fv * fv);
        bF.add(Fv * Fv);
        bc.add(fv * Fv);
        bd.add(dv * dv);
      }
      nf.add(bf.s);
      nF.add(bF.s);
      cr.add(bc.s);
      nd.add(bd.s);
    }
    rep.empirical.norm_f_sq = nf.s;
    rep.empirical.norm_FR_sq = nF.s;
    rep.empirical.cross_term = cr.s;
    rep.empirical.norm_delta_sq = nd.s;
  }

  std::vector<double> delta(x + 1, 0.0);
  for (uint64_t n = 1; n <= x; ++n) delta[n] = static_cast<double>(f.values[n]) - frv[n];
  frv.clear();
  frv.shrink_to_fit();

  // band x/2N < q <= x/N, integer cutoffs: 2Nq > x and Nq <= x
  uint64_t q_lo = x / (2 * N) + 1;
  uint64_t q_hi = x / N;

  std::vector<double> per_q(q_hi >= q_lo ? q_hi - q_lo + 1 : 0, 0.0);
  uint64_t terms = 0;
#pragma omp parallel num_threads(threads) reduction(+ : terms)
  {
    std::vector<double> cls(q_hi + 1, 0.0);
#pragma omp for schedule(dynamic, 64)
    for (int64_t qi = static_cast<int64_t>(q_lo); qi <= static_cast<int64_t>(q_hi); ++qi) {
      uint64_t q = static_cast<uint64_t>(qi);
      std::fill(cls.begin(), cls.begin() + q, 0.0);
      uint64_t t = 1 % q;
      for (uint64_t n = 1; n <= x; ++n) {
        cls[t] += delta[n];
        if (++t == q) t = 0;
      }
      Kahan vq;
      for (uint64_t i = 0; i < q; ++i) vq.add(cls[i] * cls[i]);
      per_q[q - q_lo] = vq.s;
      terms += x;
    }
  }
  Kahan v;
  for (double s : per_q) v.add(s);
  rep.empirical.V = v.s;
  rep.diagnostics.q_count = per_q.size();
  rep.diagnostics.term_count = terms;
  rep.theoretical.main_term_sum_r = fr_norm_theory(model, static_cast<double>(x), R);
  rep.diagnostics.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

KappaIdentityReport kappa_identity_suite(const TaukModel& model, uint64_t r_max) {
  if (r_max > 500) throw std::domain_error("kappa_identity_suite: r_max <= 500");
  if (r_max > model.R()) throw std::domain_error("kappa_identity_suite: r_max beyond model bound");
  KappaIdentityReport rep;
  rep.r_max = r_max;

  // (1) sum_{m|r} kappa(m,r) h_{j'}(m)/m = (h_{j'}*mu)(r)/phi(r), multiprecision
  PrecisionGuard guard(model.prec_bits());
  for (uint64_t r = 1; r <= r_max; ++r) {
    std::vector<uint64_t> ds = divisors(r);
    Real phi_r(euler_phi(r));
    for (int j = 0; j < model.k(); ++j) {
      Real lhs(0);
      for (uint64_t m : ds) {
        mpq_class km = kappa(m, r);
        if (km == 0) continue;
        lhs += to_real(km) * model.h(j, m) / Real(m);
      }
      Real rhs = model.h_star(j, r) / phi_r;
      double err = std::abs(static_cast<double>(lhs - rhs));
      rep.max_err_first = std::max(rep.max_err_first, err);
    }
    ++rep.moduli_checked;
  }

  // (2) sum_{m|r, m'|r'} kappa(m,r)kappa(m',r')/[m,m'] = 1_{r=r'}/phi(r), exact
  std::vector<std::vector<uint64_t>> divs(r_max + 1);
  std::vector<std::vector<mpq_class>> kap(r_max + 1);
  for (uint64_t r = 1; r <= r_max; ++r) {
    divs[r] = divisors(r);
    kap[r].reserve(divs[r].size());
    for (uint64_t m : divs[r]) kap[r].push_back(kappa(m, r));
  }
  for (uint64_t r = 1; r <= r_max; ++r) {
    for (uint64_t r2 = r; r2 <= r_max; ++r2) {
      mpq_class acc(0);
      for (size_t i = 0; i < divs[r].size(); ++i) {
        if (kap[r][i] == 0) continue;
        uint64_t m = divs[r][i];
        for (size_t i2 = 0; i2 < divs[r2].size(); ++i2) {
          if (kap[r2][i2] == 0) continue;
          uint64_t m2 = divs[r2][i2];
          uint64_t l = m / std::gcd(m, m2) * m2;
          acc += kap[r][i] * kap[r2][i2] / mpq_class(static_cast<unsigned long>(l));
        }
      }
      mpq_class expect = (r == r2) ? mpq_class(1, static_cast<unsigned long>(euler_phi(r))) : mpq_class(0);
      expect.canonicalize();
      if (acc != expect) {
        rep.second_exact = false;
        throw std::runtime_error("kappa identity violated at (r, r') = (" + std::to_string(r) + ", " +
                                 std::to_string(r2) + ")");
      }
      ++rep.pairs_checked;
    }
  }
  return rep;
}

}  // namespace majorarcs
