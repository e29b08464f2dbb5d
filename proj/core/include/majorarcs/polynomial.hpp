#pragma once
// Dense exact-rational polynomials. Coefficient vectors are kept trimmed
// (no trailing zeros); the zero polynomial has degree -1.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "majorarcs/mp.hpp"

namespace majorarcs {

class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(const mpq_class& c);
  static PolyQ monomial(int degree, const mpq_class& coeff = mpq_class(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int i) const;  // 0 outside [0, degree]

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const mpq_class& s);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const mpq_class& s) { return a *= s; }
  PolyQ pow(unsigned n) const;

  mpq_class eval(const mpq_class& x) const;
  Real eval(const Real& x) const;

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Exact-rational polynomial produced by a residue computation, with a note
// saying which residue produced it.
struct ResiduePolynomial {
  std::string variable;
  PolyQ poly;
  std::string provenance;

  int degree() const { return poly.degree(); }
  mpq_class coeff(int i) const { return poly.coeff(i); }
};

}  // namespace majorarcs
