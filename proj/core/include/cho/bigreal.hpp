#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace cho {

/// Arbitrary-precision real with an explicit decimal working precision.
///
/// Every value carries the number of decimal digits it was created for;
/// binary operations produce results at the wider of the two operand
/// precisions, so a computation pinned to W digits stays at W digits.
/// Decimal I/O is correctly rounded (round-half-even via MPFR's RNDN).
class BigReal {
 public:
  static constexpr int kMinDigits = 10;

  BigReal() : BigReal(0L, kMinDigits) {}
  explicit BigReal(long value, int digits = kMinDigits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal string directly at the requested working precision.
  /// Throws std::invalid_argument on anything but a finite decimal number.
  static BigReal from_string(std::string_view text, int digits);

  /// 10^exponent at the requested precision.
  static BigReal pow10(long exponent, int digits);

  int precision_digits() const { return digits_; }
  BigReal round_to(int digits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal exponent e with 10^(e-1) <= |x| < 10^e; LONG_MIN for zero.
  long dec_exponent() const;

  /// Fixed-point decimal string with exactly `fractional_digits` digits
  /// after the point, round-half-even.
  std::string to_fixed(int fractional_digits) const;

  /// Scientific notation with `significant_digits` digits, round-half-even.
  std::string to_sci(int significant_digits) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator+=(long k);
  BigReal& operator-=(long k);
  BigReal& operator*=(long k);
  BigReal& operator/=(long k);

  friend BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add); }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub); }
  friend BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul); }
  friend BigReal operator/(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_div); }
  friend BigReal operator+(const BigReal& a, long k);
  friend BigReal operator-(const BigReal& a, long k);
  friend BigReal operator*(const BigReal& a, long k);
  friend BigReal operator/(const BigReal& a, long k);
  friend BigReal operator-(const BigReal& a);
  friend BigReal abs(const BigReal& a);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return b <= a; }

  friend void swap(BigReal& a, BigReal& b) noexcept {
    mpfr_swap(a.v_, b.v_);
    std::swap(a.digits_, b.digits_);
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  struct uninitialized_tag {};
  BigReal(uninitialized_tag, int digits);

  using mpfr_binary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigReal binary(const BigReal& a, const BigReal& b, mpfr_binary_fn fn);

  mpfr_t v_;
  int digits_;
};

}  // namespace cho
