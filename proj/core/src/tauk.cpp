#include "majorarcs/tauk.hpp"

#include <omp.h>

#include <cmath>

namespace majorarcs {

namespace {

double factorial_d(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int64_t tau_prime_power(int k, int e) { return binomial_checked(uint64_t(e) + k - 1, uint64_t(k) - 1); }

}  // namespace

double DensityBasis::u(int j, double t) const {
  if (t < 1.0) return 0.0;
  int m = k - 1 - j;
  return std::pow(std::log(t), m) / factorial_d(m);
}

double DensityBasis::U(int j, double x) const {
  if (x < 1.0) return 0.0;
  int m = k - 1 - j;
  return integral_log_power(m, x) / factorial_d(m);
}

Real DensityBasis::u_mp(int j, const Real& t) const {
  if (t < 1) return Real(0);
  int m = k - 1 - j;
  Real f(1);
  for (int i = 2; i <= m; ++i) f *= i;
  return pow(log(t), m) / f;
}

double integral_log_power(int m, double x) {
  if (m < 0) throw std::domain_error("integral_log_power: m >= 0");
  if (x <= 1.0) return 0.0;
  double L = std::log(x);
  // sum_{i=0..m} (-1)^{m-i} (m!/i!) L^i, descending i
  double acc = 0.0, f = 1.0, sign = 1.0;
  double Lp = std::pow(L, m);
  for (int i = m; i >= 0; --i) {
    acc += sign * f * Lp;
    sign = -sign;
    if (i > 0) {
      f *= i;
      Lp /= L;
    }
  }
  double m_fact = factorial_d(m);
  return x * acc - ((m % 2 == 0) ? m_fact : -m_fact);
}

Real integral_log_power(int m, const Real& x) {
  if (m < 0) throw std::domain_error("integral_log_power: m >= 0");
  if (x <= 1) return Real(0);
  Real L = log(x);
  Real acc(0), f(1);
  Real Lp = pow(L, m);
  int sign = 1;
  for (int i = m; i >= 0; --i) {
    Real term = f * Lp;
    if (sign > 0)
      acc += term;
    else
      acc -= term;
    sign = -sign;
    if (i > 0) {
      f *= i;
      Lp /= L;
    }
  }
  Real m_fact(1);
  for (int i = 2; i <= m; ++i) m_fact *= i;
  return x * acc - ((m % 2 == 0) ? m_fact : -m_fact);
}

SeriesR local_factor_series(uint64_t p, int v, int k, int order) {
  if (!is_prime_u64(p)) throw std::domain_error("local_factor_series: p must be prime");
  if (v < 1 || k < 1 || order < 0) throw std::domain_error("local_factor_series: need v >= 1, k >= 1");
  const mpq_class center(1);

  // x = p^{-s} = (1/p) e^{-X log p}
  Real logp = log(Real(p));
  SeriesR ex = SeriesR::monomial(center, 1, -logp, order).exp_series();
  SeriesR x = ex * (Real(1) / Real(p));

  // inner = x^{-v} ((1-x)^{-k} - sum_{m<v} tau_k(p^m) x^m)
  SeriesR one = SeriesR::constant(center, Real(1), order);
  SeriesR one_minus_x = one - x;
  SeriesR inner = one_minus_x.pow(-k);
  SeriesR xm = one;
  for (int m = 0; m < v; ++m) {
    if (m > 0) xm = xm * x;
    inner = inner - xm * Real(tau_prime_power(k, m));
  }
  inner = inner * x.pow(-v);

  return one_minus_x.pow(k) * inner * (Real(1) / Real(tau_prime_power(k, v)));
}

SeriesR correction_series(uint64_t d, int k, int order) {
  SeriesR g = SeriesR::constant(mpq_class(1), Real(1), order);
  for (const auto& [p, e] : factorize(d).factors) g = g * local_factor_series(p, e, k, order);
  return g;
}

Real h_coefficient(int j, uint64_t d, int k, unsigned precision_bits) {
  PrecisionGuard guard(precision_bits);
  const int order = k + 2;
  SeriesR z = zeta_kernel(k, order, precision_bits) * correction_series(d, k, order);
  if (d > 1) {
    SeriesR damp = SeriesR::monomial(mpq_class(1), 1, -log(Real(d)), order).exp_series();
    z = z * damp;
  }
  // h_{j,k}(d) = tau_k(d) (c_j + c_{j-1}) with c_i the Taylor coefficients
  Real tau_d(1);
  for (const auto& [p, e] : factorize(d).factors) tau_d *= Real(tau_prime_power(k, e));
  Real c_j = z.coeff(j);
  Real c_jm1 = (j >= 1) ? z.coeff(j - 1) : Real(0);
  return tau_d * (c_j + c_jm1);
}

TaukModel TaukModel::build(int k, uint64_t R, unsigned precision_bits, int threads) {
  if (k < 2) throw std::domain_error("TaukModel: k >= 2");
  if (R < 1) throw std::domain_error("TaukModel: R >= 1");
  PrecisionGuard guard(precision_bits);

  TaukModel m;
  m.k_ = k;
  m.R_ = R;
  m.prec_bits_ = precision_bits;
  m.basis_ = DensityBasis{k};
  m.h_.assign(k, std::vector<Real>(R + 1, Real(0)));
  m.hstar_.assign(k, std::vector<Real>(R + 1, Real(0)));

  const int order = k + 2;
  const SeriesR kernel = zeta_kernel(k, order, precision_bits);

#pragma omp parallel num_threads(threads)
  {
    set_precision_bits(precision_bits);
#pragma omp for schedule(dynamic, 16)
    for (int64_t d = 1; d <= static_cast<int64_t>(R); ++d) {
      SeriesR z = kernel * correction_series(d, k, order);
      if (d > 1) {
        SeriesR damp = SeriesR::monomial(mpq_class(1), 1, -log(Real(d)), order).exp_series();
        z = z * damp;
      }
      Real tau_d(1);
      for (const auto& [p, e] : factorize(d).factors) tau_d *= Real(tau_prime_power(k, e));
      for (int j = 0; j < k; ++j) {
        Real c_jm1 = (j >= 1) ? z.coeff(j - 1) : Real(0);
        m.h_[j][d] = tau_d * (z.coeff(j) + c_jm1);
      }
    }
  }

  // (h_j * mu)(r) over the divisor lattice
  for (uint64_t r = 1; r <= R; ++r) {
    for (uint64_t dv : divisors(r)) {
      int64_t mu = moebius(r / dv);
      if (mu == 0) continue;
      for (int j = 0; j < k; ++j) {
        if (mu > 0)
          m.hstar_[j][r] += m.h_[j][dv];
        else
          m.hstar_[j][r] -= m.h_[j][dv];
      }
    }
  }
  return m;
}

Real TaukModel::h_star_approx(int j, uint64_t r) const {
  if (r > R_) throw std::domain_error("h_star_approx: r beyond table bound");
  PrecisionGuard guard(prec_bits_);
  Real fact(1);
  for (int i = 2; i <= j; ++i) fact *= i;
  Real acc(0);
  for (uint64_t dv : divisors(r)) {
    int64_t mu = moebius(r / dv);
    if (mu == 0) continue;
    Real term = h_.at(0).at(dv) * pow(-log(Real(dv)), j) / fact;
    acc += (mu > 0) ? term : -term;
  }
  return acc;
}

double TaukModel::max_fast_mode_discrepancy(int j) const {
  double worst = 0.0;
  for (uint64_t r = 1; r <= R_; ++r)
    worst = std::max(worst, std::abs(static_cast<double>(h_star(j, r) - h_star_approx(j, r))));
  return worst;
}

double divisor_class_sum(const ArithmeticTable& f, double x, uint64_t d) {
  if (x > static_cast<double>(f.limit)) throw std::domain_error("divisor_class_sum: x beyond table limit");
  if (d == 0) throw std::domain_error("divisor_class_sum: d >= 1");
  uint64_t xi = static_cast<uint64_t>(x);
  double acc = 0.0;
  for (uint64_t n = d; n <= xi; n += d) acc += static_cast<double>(f.values[n]);
  return acc;
}

double main_term_Ad(const TaukModel& model, double x, uint64_t d) {
  double acc = 0.0;
  for (int j = 0; j < model.k(); ++j)
    acc += model.h_d(j, d) / static_cast<double>(d) * model.basis().U(j, x);
  return acc;
}

}  // namespace majorarcs
