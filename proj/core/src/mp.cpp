#include "majorarcs/mp.hpp"

#include <cmath>

namespace majorarcs {

unsigned set_precision_bits(unsigned bits) {
  if (bits < 24) bits = 24;
  // boost's default_precision is in decimal digits; round up.
  unsigned digits = static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 1;
  Real::default_precision(digits);
  return precision_bits();
}

unsigned precision_bits() {
  return static_cast<unsigned>(std::floor(Real::default_precision() * 3.321928094887362));
}

}  // namespace majorarcs
