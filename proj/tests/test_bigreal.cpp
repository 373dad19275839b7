#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "cho/bigreal.hpp"
#include "cho/rational.hpp"

using cho::BigReal;

TEST_CASE("decimal strings parse at the requested precision") {
  BigReal half = BigReal::from_string("0.5", 50);
  CHECK(half.to_fixed(3) == "0.500");
  CHECK(half.precision_digits() == 50);

  // grid radii are dyadic, so squaring stays exact
  BigReal rc = BigReal::from_string("3.5", 50);
  CHECK((rc * rc).to_fixed(4) == "12.2500");

  CHECK_THROWS_AS(BigReal::from_string("12.3.4", 20), std::invalid_argument);
  CHECK_THROWS_AS(BigReal::from_string("energy", 20), std::invalid_argument);
  CHECK_THROWS_AS(BigReal::from_string("", 20), std::invalid_argument);
  CHECK_THROWS_AS(BigReal::from_string("inf", 20), std::invalid_argument);
}

TEST_CASE("fixed-point output rounds half to even") {
  // 0.125 and 0.375 are exact in binary, so the decimal tie is genuine
  CHECK(BigReal::from_string("0.125", 30).to_fixed(2) == "0.12");
  CHECK(BigReal::from_string("0.375", 30).to_fixed(2) == "0.38");
  CHECK(BigReal::from_string("2.5", 30).to_fixed(0) == "2");
  CHECK(BigReal::from_string("3.5", 30).to_fixed(0) == "4");
  CHECK(BigReal::from_string("1.0049", 30).to_fixed(2) == "1.00");
}

TEST_CASE("arithmetic takes the wider operand precision") {
  BigReal narrow(1L, 20);
  BigReal wide = BigReal::from_string("3", 120);
  CHECK((narrow + wide).precision_digits() == 120);
  CHECK((wide / narrow).precision_digits() == 120);

  BigReal third = BigReal(1L, 120) / 3;
  // 1/3 carried at 120 digits must survive 100 digits of output
  std::string s = third.to_fixed(100);
  CHECK(s.substr(0, 5) == "0.333");
  CHECK(s.find('4') == std::string::npos);
}

TEST_CASE("pow10 and decimal exponents") {
  CHECK(BigReal::pow10(-3, 20).to_fixed(4) == "0.0010");
  CHECK(BigReal::pow10(2, 20).to_fixed(1) == "100.0");

  CHECK(BigReal::from_string("123.4", 30).dec_exponent() == 3);
  CHECK(BigReal::from_string("0.99", 30).dec_exponent() == 0);
  CHECK(BigReal::from_string("0.0004", 30).dec_exponent() == -3);
  CHECK(BigReal::from_string("1", 30).dec_exponent() == 1);
}

TEST_CASE("comparisons are exact and precision-independent") {
  BigReal a = BigReal::from_string("2.25", 15);
  BigReal b = BigReal::from_string("2.25", 300);
  CHECK(a == b);
  CHECK(!(a < b));
  CHECK(a - b == BigReal(0L, 15));
  CHECK((a - b).is_zero());
  CHECK(BigReal(-3L, 10).sign() == -1);
  CHECK(BigReal(0L, 10).sign() == 0);
}

TEST_CASE("rationals bridge exactly for half-integers") {
  cho::Rational b = cho::make_rational(5, 2);
  BigReal x = cho::to_bigreal(b, 40);
  CHECK(x.to_fixed(2) == "2.50");
  // half-integers are dyadic: the conversion is exact at any precision
  CHECK(cho::to_bigreal(b, 15) == cho::to_bigreal(b, 350));
}

TEST_CASE("scientific rendering") {
  BigReal tiny = BigReal::pow10(-42, 30) * 41764526L;
  auto s = tiny.to_sci(8);
  CHECK(s.substr(0, 9) == "4.1764526");
  CHECK(s.find("e-35") != std::string::npos);
}
