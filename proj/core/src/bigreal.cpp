#include "cho/bigreal.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace cho {

namespace {

mpfr_prec_t bits_for(int digits) {
  // log2(10) per decimal digit plus a small pad so the last requested
  // decimal digit is not the one absorbing binary rounding.
  constexpr double kLog2Of10 = 3.32192809488736234787;
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 8;
}

int clamp_digits(int digits) { return std::max(digits, BigReal::kMinDigits); }

}  // namespace

BigReal::BigReal(uninitialized_tag, int digits) : digits_(clamp_digits(digits)) {
  mpfr_init2(v_, bits_for(digits_));
}

BigReal::BigReal(long value, int digits) : digits_(clamp_digits(digits)) {
  mpfr_init2(v_, bits_for(digits_));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    BigReal tmp(other);
    swap(*this, tmp);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  swap(*this, other);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_string(std::string_view text, int digits) {
  BigReal r(uninitialized_tag{}, digits);
  std::string owned(text);
  if (owned.empty() || mpfr_set_str(r.v_, owned.c_str(), 10, MPFR_RNDN) != 0 ||
      !mpfr_number_p(r.v_)) {
    throw std::invalid_argument("not a finite decimal number: '" + owned + "'");
  }
  return r;
}

BigReal BigReal::pow10(long exponent, int digits) {
  BigReal r(uninitialized_tag{}, digits);
  mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(std::labs(exponent)), MPFR_RNDN);
  if (exponent < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::round_to(int digits) const {
  BigReal r(uninitialized_tag{}, digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigReal::dec_exponent() const {
  if (is_zero()) return LONG_MIN;
  mpfr_exp_t e = 0;
  // RNDZ: truncation cannot carry into a higher decade, so the exponent
  // is exact.
  char* s = mpfr_get_str(nullptr, &e, 10, 2, v_, MPFR_RNDZ);
  mpfr_free_str(s);
  return static_cast<long>(e);
}

std::string BigReal::to_fixed(int fractional_digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*R*f", fractional_digits, MPFR_RNDN, v_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string BigReal::to_sci(int significant_digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*R*e", std::max(significant_digits - 1, 0), MPFR_RNDN, v_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigReal BigReal::binary(const BigReal& a, const BigReal& b, mpfr_binary_fn fn) {
  BigReal r(uninitialized_tag{}, std::max(a.digits_, b.digits_));
  fn(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  if (digits_ >= o.digits_) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  return *this = *this + o;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  if (digits_ >= o.digits_) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  return *this = *this - o;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  if (digits_ >= o.digits_) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  return *this = *this * o;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (digits_ >= o.digits_) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  return *this = *this / o;
}

BigReal& BigReal::operator+=(long k) {
  mpfr_add_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(long k) {
  mpfr_sub_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, long k) {
  BigReal r(a);
  r += k;
  return r;
}

BigReal operator-(const BigReal& a, long k) {
  BigReal r(a);
  r -= k;
  return r;
}

BigReal operator*(const BigReal& a, long k) {
  BigReal r(a);
  r *= k;
  return r;
}

BigReal operator/(const BigReal& a, long k) {
  BigReal r(a);
  r /= k;
  return r;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& a) {
  BigReal r(a);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

}  // namespace cho
