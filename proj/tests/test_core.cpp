#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "cho/oscillator.hpp"

using cho::BigReal;
using cho::OscillatorState;
using cho::PrecisionConfig;
using cho::Rational;

TEST_CASE("free energies are the exact rationals 2n + l + D/2") {
  CHECK(cho::free_energy({3, 0, 0}) == cho::make_rational(3, 2));
  CHECK(cho::free_energy({5, 1, 0}) == cho::make_rational(7, 2));
  CHECK(cho::free_energy({1, 0, 0}) == cho::make_rational(1, 2));
  // D=1 parity encoding: 2n + l + 1/2 = n_total + 1/2
  CHECK(cho::free_energy({1, 1, 3}) == cho::make_rational(15, 2));
}

TEST_CASE("free energy increases strictly in each quantum number") {
  for (int d = 1; d <= 6; ++d) {
    for (int l = 0; l <= (d == 1 ? 0 : 3); ++l) {
      for (int n = 0; n <= 3; ++n) {
        OscillatorState s{d, l, n};
        CHECK(cho::free_energy({d, l, n + 1}) > cho::free_energy(s));
        if (d > 1) CHECK(cho::free_energy({d, l + 1, n}) > cho::free_energy(s));
        CHECK(cho::free_energy({d + 1, l, n}) > cho::free_energy(s));
      }
    }
  }
}

TEST_CASE("quantization parameters reproduce the known parity cases") {
  BigReal e = BigReal::from_string("4.951", 60);

  // even parity in one dimension: a = (1 - 2E)/4, b = 1/2
  auto even = cho::kummer_params({1, 0, 0}, e);
  CHECK(even.b == cho::make_rational(1, 2));
  CHECK(even.a == (BigReal(1L, 60) - e * 2) / 4);

  // odd parity: a = (3 - 2E)/4, b = 3/2
  auto odd = cho::kummer_params({1, 1, 0}, e);
  CHECK(odd.b == cho::make_rational(3, 2));
  CHECK(odd.a == (BigReal(3L, 60) - e * 2) / 4);

  // direct substitutions
  auto flat = cho::kummer_params({2, 0, 0}, BigReal(3L, 60));
  CHECK(flat.a == BigReal(-1L, 60));
  CHECK(flat.b == cho::make_rational(1, 1));

  for (int n = 0; n <= 4; ++n) {
    auto p = cho::kummer_params({3, 1, n}, cho::to_bigreal(cho::free_energy({3, 1, n}), 60));
    CHECK(p.b == cho::make_rational(5, 2));
    CHECK(p.a == BigReal(-n, 60));
  }
}

TEST_CASE("a is a nonpositive integer exactly at terminating energies") {
  // E = free_energy + 2m gives a = -(n + m); in particular a = -n at the
  // free eigenvalue itself.
  for (int d : {1, 2, 3, 4, 5}) {
    for (int l = 0; l <= (d == 1 ? 1 : 2); ++l) {
      for (int n = 0; n <= 2; ++n) {
        OscillatorState s{d, l, n};
        for (int m = 0; m <= 3; ++m) {
          BigReal e = cho::to_bigreal(cho::free_energy(s) + 2 * m, 50);
          CHECK(cho::kummer_params(s, e).a == BigReal(-(n + m), 50));
        }
      }
    }
  }
}

TEST_CASE("b depends only on l + D/2") {
  for (int d = 1; d <= 5; ++d) {
    for (int l = 1; l <= 3; ++l) {
      if (d == 1 && l > 1) continue;
      BigReal e = BigReal::from_string("2.71828", 40);
      auto p1 = cho::kummer_params({d, l, 0}, e);
      auto p2 = cho::kummer_params({d + 2, l - 1, 0}, e);
      CHECK(p1.b == p2.b);
      CHECK(p1.a == p2.a);
    }
  }
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS((OscillatorState{0, 0, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((OscillatorState{1, 2, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((OscillatorState{3, -1, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((OscillatorState{3, 0, -1}).validate(), std::invalid_argument);
  CHECK_NOTHROW((OscillatorState{1, 1, 5}).validate());
  CHECK_NOTHROW((OscillatorState{2, 7, 0}).validate());
}

TEST_CASE("precision policy") {
  PrecisionConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  // base guard plus ~0.4343 digits per unit of z
  CHECK(cfg.initial_working_digits(50, 0.25) == 81);
  CHECK(cfg.initial_working_digits(50, 121.0) == 133);
  CHECK(cfg.initial_working_digits(20, 121.0) == 103);

  CHECK(cfg.escalate(100) == 150);
  CHECK(cfg.escalate(399) == 400);
  CHECK(cfg.escalate(400) == std::nullopt);

  PrecisionConfig bad = cfg;
  bad.max_working_digits = 60;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.target_digits = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("problems cache the squared radius at full precision") {
  PrecisionConfig cfg;
  auto p = cho::make_problem({3, 0, 0}, "10.5", cfg);
  CHECK(p.z() == BigReal::from_string("110.25", 400));
  CHECK(p.z().precision_digits() == cfg.max_working_digits);
  CHECK_THROWS_AS(cho::make_problem({3, 0, 0}, "0", cfg), std::invalid_argument);
  CHECK_THROWS_AS(cho::make_problem({3, 0, 0}, "-2", cfg), std::invalid_argument);
  CHECK_THROWS_AS(cho::make_problem({3, 0, 0}, "two", cfg), std::invalid_argument);
}
