#pragma once

// Test-only oracles, independent of the library's numerical path: exact
// rational arithmetic throughout (GMP mpq), no rounding anywhere.

#include <stdexcept>
#include <vector>

#include "cho/rational.hpp"

namespace cho_test {

// 1F1(-m; b; z) for a nonpositive integer first parameter: the exact
// polynomial sum  sum_{k=0..m} (-m)_k / (b)_k * z^k / k!.
inline cho::Rational kummer_polynomial(long m, const cho::Rational& b, const cho::Rational& z) {
  if (m < 0) throw std::invalid_argument("kummer_polynomial needs m >= 0");
  cho::Rational term(1);
  cho::Rational sum(1);
  cho::Rational ak(-m);
  cho::Rational bk(b);
  for (long k = 0; k < m; ++k) {
    term *= ak;
    term /= bk;
    term *= z;
    term /= cho::Rational(k + 1);
    sum += term;
    ak += 1;
    bk += 1;
  }
  return sum;
}

// Coefficients c_p of F = sum c_p r^p (even p only) from the radial
// recurrence, exact over the rationals; at a terminating energy these are
// the polynomial's coefficients in r^2.
inline std::vector<cho::Rational> radial_series_coefficients(int dimension, int angular,
                                                             const cho::Rational& energy,
                                                             int pairs) {
  std::vector<cho::Rational> c{cho::Rational(1)};
  cho::Rational b_prime = cho::make_rational(2L * angular + dimension, 2);
  for (int i = 0; i + 1 < pairs; ++i) {
    long p = 2L * i;
    cho::Rational num = (b_prime + p - energy) * 2;
    cho::Rational den((p + 2) * (p + 2L * angular + dimension));
    c.push_back(c.back() * num / den);
  }
  return c;
}

// The 1F1 series coefficients (a)_k / ((b)_k k!) as exact rationals.
inline std::vector<cho::Rational> kummer_series_coefficients(const cho::Rational& a,
                                                             const cho::Rational& b, int count) {
  std::vector<cho::Rational> c{cho::Rational(1)};
  cho::Rational ak(a);
  cho::Rational bk(b);
  for (int k = 0; k + 1 < count; ++k) {
    c.push_back(c.back() * ak / bk / cho::Rational(k + 1));
    ak += 1;
    bk += 1;
  }
  return c;
}

}  // namespace cho_test
