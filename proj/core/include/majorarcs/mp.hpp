#pragma once
// Multiprecision real ring used wherever exact rationals cannot reach
// (Stieltjes constants, log p, log d). Precision is a per-thread runtime
// setting; everything in one run uses one precision.

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace majorarcs {

using Real = boost::multiprecision::mpfr_float;

inline Real to_real(const mpq_class& q) { return Real(q.get_mpq_t()); }
inline Real to_real(const mpz_class& z) { return Real(z.get_mpz_t()); }

inline constexpr unsigned kDefaultPrecisionBits = 128;

// Sets the default precision for Reals constructed afterwards on the calling
// thread. Parallel regions must call this on each worker before touching
// Reals. Returns the precision actually in effect (>= bits).
unsigned set_precision_bits(unsigned bits);
unsigned precision_bits();

struct PrecisionGuard {
  explicit PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
    set_precision_bits(bits);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;  // decimal digits, boost convention
};

}  // namespace majorarcs
