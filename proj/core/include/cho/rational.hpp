#pragma once

#include <gmpxx.h>

#include <string>

#include "cho/bigreal.hpp"

namespace cho {

/// Exact rational, used wherever a quantity is a half-integer or an exact
/// polynomial coefficient (quantization parameters, free energies, the
/// terminating-series oracle).
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline BigReal to_bigreal(const Rational& q, int digits) {
  BigReal r(0L, digits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace cho
