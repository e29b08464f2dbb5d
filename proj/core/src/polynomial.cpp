#include "majorarcs/polynomial.hpp"

#include <sstream>

namespace majorarcs {

PolyQ::PolyQ(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

PolyQ PolyQ::monomial(int degree, const mpq_class& coeff) {
  PolyQ p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, mpq_class(0));
    p.c_[degree] = coeff;
  }
  return p;
}

mpq_class PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return mpq_class(0);
  return c_[i];
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  PolyQ r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

PolyQ PolyQ::pow(unsigned n) const {
  PolyQ r(mpq_class(1));
  PolyQ base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

mpq_class PolyQ::eval(const mpq_class& x) const {
  mpq_class acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real PolyQ::eval(const Real& x) const {
  Real acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

std::string PolyQ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    mpq_class a = first ? mpq_class(c_[i]) : mpq_class(abs(c_[i]));
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace majorarcs
