#pragma once
// Truncated Laurent/Taylor series in one variable X around a fixed center,
// over an exact-rational or multiprecision-real coefficient ring.
//
// A series stores coefficients for degrees min_degree()..max_degree(); every
// degree below min_degree() is exactly zero, every degree above max_degree()
// is unknown (truncated away). Products shrink the window so that each kept
// coefficient is exact: deg d of a*b only needs coefficients of degree
// <= d - min_degree of the cofactor.

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "majorarcs/mp.hpp"

namespace majorarcs {

template <typename R>
class TruncatedSeries {
 public:
  // coeffs[i] is the coefficient of X^{min_degree + i}.
  TruncatedSeries(mpq_class center, int min_degree, std::vector<R> coeffs)
      : center_(std::move(center)), min_(min_degree), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient window");
  }

  // The constant series c + 0*X + ... + 0*X^order.
  static TruncatedSeries constant(mpq_class center, R value, int order) {
    std::vector<R> c(order + 1, R(0));
    c[0] = std::move(value);
    return TruncatedSeries(std::move(center), 0, std::move(c));
  }

  // c * X^degree, padded with zeros up to X^order.
  static TruncatedSeries monomial(mpq_class center, int degree, R value, int order) {
    if (order < degree) throw std::invalid_argument("TruncatedSeries: order below monomial degree");
    std::vector<R> c(order - degree + 1, R(0));
    c[0] = std::move(value);
    return TruncatedSeries(std::move(center), degree, std::move(c));
  }

  const mpq_class& center() const { return center_; }
  int min_degree() const { return min_; }
  int max_degree() const { return min_ + static_cast<int>(c_.size()) - 1; }

  // Exactly zero below the window; asking above the window is asking for a
  // truncated-away coefficient and throws.
  R coeff(int degree) const {
    if (degree < min_) return R(0);
    if (degree > max_degree()) throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
    return c_[degree - min_];
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    int lo = std::min(a.min_, b.min_), hi = std::min(a.max_degree(), b.max_degree());
    if (hi < lo) throw std::invalid_argument("TruncatedSeries: windows do not overlap");
    std::vector<R> c(hi - lo + 1, R(0));
    for (int d = lo; d <= hi; ++d) c[d - lo] = a.coeff(d) + b.coeff(d);
    return TruncatedSeries(a.center_, lo, std::move(c));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (b * R(-1));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const R& s) {
    TruncatedSeries r = a;
    for (auto& c : r.c_) c = c * s;
    return r;
  }
  friend TruncatedSeries operator*(const R& s, const TruncatedSeries& a) { return a * s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    int lo = a.min_ + b.min_;
    int hi = std::min(a.max_degree() + b.min_, b.max_degree() + a.min_);
    std::vector<R> c(hi - lo + 1, R(0));
    for (int i = 0; i < static_cast<int>(a.c_.size()); ++i) {
      if (is_zero(a.c_[i])) continue;
      int da = a.min_ + i;
      for (int j = 0; j < static_cast<int>(b.c_.size()); ++j) {
        int d = da + b.min_ + j;
        if (d > hi) break;
        c[d - lo] += a.c_[i] * b.c_[j];
      }
    }
    return TruncatedSeries(a.center_, lo, std::move(c));
  }

  // 1/this; the leading coefficient must be invertible (nonzero).
  TruncatedSeries reciprocal() const {
    const R& lead = c_.front();
    if (is_zero(lead)) throw std::domain_error("TruncatedSeries: reciprocal of series with zero leading coefficient");
    int w = static_cast<int>(c_.size());
    // unit part u = sum c_i X^i / lead with u_0 = 1; invert by recursion
    // v_0 = 1, v_n = -sum_{i=1..n} (c_i/lead) v_{n-i}.
    std::vector<R> v(w, R(0));
    v[0] = R(1);
    for (int n = 1; n < w; ++n) {
      R acc(0);
      for (int i = 1; i <= n; ++i) acc += c_[i] * v[n - i];
      v[n] = -(acc / lead);
    }
    for (auto& x : v) x = x / lead;
    return TruncatedSeries(center_, -min_, std::move(v));
  }

  TruncatedSeries pow(int n) const {
    if (n < 0) return reciprocal().pow(-n);
    TruncatedSeries base = *this;
    TruncatedSeries r = constant(center_, R(1), static_cast<int>(c_.size()) - 1);
    while (n) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  // exp of a series with min_degree >= 1 (zero constant term).
  TruncatedSeries exp_series() const {
    if (min_ < 1) throw std::domain_error("TruncatedSeries: exp needs positive valuation");
    int order = max_degree();
    TruncatedSeries r = constant(center_, R(1), order);
    TruncatedSeries term = constant(center_, R(1), order);
    R fact(1);
    for (int i = 1; i * min_ <= order; ++i) {
      term = term * (*this);
      fact = fact * R(i);
      r = r + term * (R(1) / fact);
    }
    return r;
  }

  // d/dX, degrees shift down by one. For Taylor input the constant term
  // drops and the result stays Taylor.
  TruncatedSeries derivative() const {
    if (min_ != 0) {
      std::vector<R> c(c_.size());
      for (int i = 0; i < static_cast<int>(c_.size()); ++i) c[i] = c_[i] * R(min_ + i);
      return TruncatedSeries(center_, min_ - 1, std::move(c));
    }
    std::vector<R> c;
    if (c_.size() <= 1) {
      c.push_back(R(0));
    } else {
      for (int i = 1; i < static_cast<int>(c_.size()); ++i) c.push_back(c_[i] * R(i));
    }
    return TruncatedSeries(center_, 0, std::move(c));
  }

  // Substitute X <- alpha * X (composition with the linear map through the
  // same center): coefficient of X^d picks up alpha^d.
  TruncatedSeries scale_variable(const R& alpha) const {
    std::vector<R> c = c_;
    R p = pow_ring(alpha, min_);
    for (size_t i = 0; i < c.size(); ++i) {
      c[i] = c[i] * p;
      p = p * alpha;
    }
    return TruncatedSeries(center_, min_, std::move(c));
  }

 private:
  static bool is_zero(const mpq_class& x) { return x == 0; }
  static bool is_zero(const Real& x) { return x.is_zero(); }
  static R pow_ring(const R& a, int n) {
    if (n < 0) return R(1) / pow_ring(a, -n);
    R r(1);
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
  }

  void check_compatible(const TruncatedSeries& o) const {
    if (center_ != o.center_) throw std::invalid_argument("TruncatedSeries: incompatible centers");
  }

  mpq_class center_;
  int min_;
  std::vector<R> c_;
};

using SeriesQ = TruncatedSeries<mpq_class>;
using SeriesR = TruncatedSeries<Real>;

// Stieltjes constant gamma_n at the current working precision, n <= 12.
// Values are pinned 60-digit constants; the test suite re-derives
// gamma_0..gamma_2 by Euler-Maclaurin summation to 30 digits.
Real stieltjes_constant(int n);
int max_stieltjes_order();

// zeta(s) around s=1: 1/(s-1) + sum_{n>=0} (-1)^n gamma_n (s-1)^n / n!,
// as a Laurent series in X = s-1 with coefficients up to X^order.
SeriesR zeta_laurent(int order, unsigned precision_bits = kDefaultPrecisionBits);

// {zeta(s)(s-1)}^k / s as a Taylor series in X = s-1; the common prefactor
// of every h_{j,k} series.
SeriesR zeta_kernel(int k, int order, unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace majorarcs
