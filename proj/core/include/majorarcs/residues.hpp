#pragma once
// Exact iterated-residue extraction: the c_{j,j'} table, the variance
// polynomial P_k(v) and the gamma_k(c) polynomial, all over exact rationals.
//
// Residues are read as coefficient extraction after expanding the k^2-fold
// singular factor in the region where the outer variable dominates:
// (s+s1+s2)^{-k^2} with |s1|,|s2| << |s|, and (s1+s2-z)^{-k^2} with
// |s1+s2| < |z|. This is the reading under which c_{0,0} = 1/((k-1)^2)!.

#include <array>
#include <map>

#include "majorarcs/polynomial.hpp"

namespace majorarcs {

// Sparse series in (s, s1, s2): s is a Laurent variable, s1 and s2 are
// Taylor variables. Every exponent triple respects the truncation box;
// arithmetic is exact within the box and silently drops terms outside it.
template <typename R>
class MultiSeries3 {
 public:
  struct Box {
    int s_min, s_max;
    int s1_max, s2_max;
  };

  explicit MultiSeries3(Box box) : box_(box) {}

  void add_term(int es, int e1, int e2, R c) {
    if (es < box_.s_min || es > box_.s_max || e1 < 0 || e1 > box_.s1_max || e2 < 0 || e2 > box_.s2_max)
      return;
    auto key = std::array<int, 3>{es, e1, e2};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(c));
    } else {
      it->second += c;
    }
  }

  R coeff(int es, int e1, int e2) const {
    auto it = terms_.find(std::array<int, 3>{es, e1, e2});
    return it == terms_.end() ? R() : it->second;
  }

  const Box& box() const { return box_; }
  size_t term_count() const { return terms_.size(); }

  MultiSeries3 operator*(const MultiSeries3& o) const {
    MultiSeries3 r(box_);
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : o.terms_) {
        r.add_term(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ca * cb);
      }
    }
    r.prune();
    return r;
  }

  MultiSeries3& operator+=(const MultiSeries3& o) {
    for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], c);
    prune();
    return *this;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == R()) it = terms_.erase(it);
      else ++it;
    }
  }

  Box box_;
  std::map<std::array<int, 3>, R> terms_;
};

// c_{j,j'} = Res_{s=0} Res_{s1=0,s2=0}
//            e^s (s+s1)^k (s+s2)^k / (s1^{j+1} s2^{j'+1} s^2 (s+s1+s2)^{k^2}),
// exact. Requires 2 <= k <= 8 and 0 <= j, j2 < k.
mpq_class residue_cjj(int k, int j, int j2);

// P_k(v) = sum_{j,j'} (k^2-1)! c_{j,j'} v^{j+j'} / ((k-j-1)!(k-j'-1)!),
// degree exactly 2k-2, for 2 <= k <= 8.
ResiduePolynomial assemble_pk(int k);

// Exponent of z in the denominator of the gamma_k integrand. The two
// readings printed in the source differ; z^2 is the one consistent with the
// exact identity below, z^{k^2} is kept selectable for comparison.
enum class GammaKForm { z_squared, z_pow_k2 };

// gamma_k(c) = c^{k^2-1}/(k^2-1)! + R_k(c) with
// R_k(c) = Res_{z=0} Res_{s1=0,s2=0}
//          e^z e^{c(s1+s2-z)} (s1-z)^k (s2-z)^k / (z^D s1^k s2^k (s1+s2-z)^{k^2}),
// as an exact polynomial in c; 2 <= k <= 6.
ResiduePolynomial gamma_k_polynomial(int k, GammaKForm form = GammaKForm::z_squared);

// (1-v)^{k^2-1} * gamma_k(1/(1-v)) as a polynomial in v; throws
// std::domain_error if deg gamma_k > k^2-1 (then the substitution is not
// polynomial, which is how the inconsistent GammaKForm shows up).
PolyQ gamma_reflection(const ResiduePolynomial& gamma_k, int k);

// Both sides of the exact identity
// (1 - v^{(k-1)^2} P_k(v)) / (k^2-1)!  ==  (1-v)^{k^2-1} gamma_k(1/(1-v)).
struct GammaIdentity {
  PolyQ lhs, rhs;
  bool holds() const { return lhs == rhs; }
};
GammaIdentity gamma_identity_check(int k, GammaKForm form = GammaKForm::z_squared);

}  // namespace majorarcs
