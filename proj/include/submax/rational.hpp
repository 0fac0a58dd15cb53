#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "submax/errors.hpp"

namespace submax {

// Arbitrary-precision rational, always reduced, denominator > 0.
using Rational = mpq_class;

/// Exact conversion: binary doubles are dyadic rationals.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidArgumentError("non-finite value");
  Rational r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

inline double rational_to_double(const Rational& r) { return r.get_d(); }

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

} // namespace submax
