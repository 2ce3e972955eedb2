#pragma once

#include <string>

#include "mersexp/errors.hpp"

namespace mersexp::detail {

inline long floor_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

/// Least positive inverse of a modulo m (m >= 2).
inline unsigned inverse_mod(unsigned a, unsigned m) {
  long old_r = static_cast<long>(a % m), r = static_cast<long>(m);
  long old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw ParameterError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return static_cast<unsigned>(floor_mod(old_s, static_cast<long>(m)));
}

}  // namespace mersexp::detail
