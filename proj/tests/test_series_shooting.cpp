#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tuple>
#include <utility>
#include <vector>

#include "cho/errors.hpp"
#include "cho/kummer.hpp"
#include "cho/root_solver.hpp"
#include "cho/series_shooting.hpp"
#include "oracle.hpp"

using cho::BigReal;
using cho::PrecisionConfig;
using cho::Rational;
using cho::ShootResult;

namespace {

PrecisionConfig cfg_with(int digits) {
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  return cfg;
}

}  // namespace

TEST_CASE("series coefficients equal the hypergeometric coefficients exactly") {
  // same function, two recurrences: under z = r^2 the Taylor coefficients
  // of F and the 1F1 coefficients at a = (l + D/2 - E)/2, b = l + D/2 must
  // agree term by term, checked in exact rational arithmetic
  for (const auto& [d, l] : {std::pair<int, int>{1, 0}, {1, 1}, {2, 0}, {3, 1}, {5, 2}}) {
    Rational b = cho::make_rational(2L * l + d, 2);
    for (const Rational& e : {cho::make_rational(7, 2), cho::make_rational(-1, 2), Rational(6)}) {
      Rational a = (b - e) / 2;
      auto radial = cho_test::radial_series_coefficients(d, l, e, 30);
      auto kummer = cho_test::kummer_series_coefficients(a, b, 30);
      REQUIRE(radial.size() == kummer.size());
      for (std::size_t k = 0; k < radial.size(); ++k) CHECK(radial[k] == kummer[k]);
    }
  }
}

TEST_CASE("one-dimensional recurrence is the D=1 case of the radial one") {
  // the parity-resolved coefficient recurrence T_{p+2}/T_p =
  // 2(p + 1/2 - E) x^2/((p+1)(p+2)), with p running over the full
  // wavefunction powers, matches the unified recurrence at (D=1, l)
  for (int l : {0, 1}) {
    Rational e = cho::make_rational(9, 4);
    auto unified = cho_test::radial_series_coefficients(1, l, e, 20);
    std::vector<Rational> parity{Rational(1)};
    for (int i = 0; i + 1 < 20; ++i) {
      long p_psi = 2L * i + l;  // psi = x^l F(x^2)
      Rational num = (cho::make_rational(2 * p_psi + 1, 2) - e) * 2;
      Rational den((p_psi + 1) * (p_psi + 2));
      parity.push_back(parity.back() * num / den);
    }
    for (std::size_t k = 0; k < unified.size(); ++k) CHECK(unified[k] == parity[k]);
  }
}

TEST_CASE("terminating energies give exact polynomial wall values") {
  // E = free energy => the series terminates and the wall value must equal
  // the exact rational oracle at z = r_c^2 = 9/4
  for (const auto& [d, l, n] : {std::tuple<int, int, int>{2, 0, 1}, {3, 1, 2}, {1, 1, 1}}) {
    PrecisionConfig cfg;
    cho::OscillatorState st{d, l, n};
    auto problem = cho::make_problem(st, "1.5", cfg);
    BigReal e = cho::to_bigreal(cho::free_energy(st), 60);
    ShootResult sr = cho::shoot(problem, e, 60, 0);
    CHECK(sr.terminated);
    Rational exact = cho_test::kummer_polynomial(n, cho::kummer_b(st), cho::make_rational(9, 4));
    BigReal err = abs(sr.f_at_rc - cho::to_bigreal(exact, 90));
    CHECK(err < BigReal::pow10(-50, 20));
  }

  // flat-disk wall value vanishes identically at E = 3, r_c = 1
  PrecisionConfig cfg;
  auto problem = cho::make_problem({2, 0, 0}, "1.0", cfg);
  ShootResult sr = cho::shoot(problem, BigReal(3L, 60), 60, 0);
  CHECK(sr.f_at_rc.is_zero());
  CHECK(sr.terminated);
}

TEST_CASE("wall value is small at a published eigenvalue") {
  PrecisionConfig cfg;
  auto problem = cho::make_problem({1, 0, 0}, "0.5", cfg);
  BigReal e = BigReal::from_string("4.95112932325413041195", 130);
  auto cs = cho::shoot_certified(problem, e, 18, cfg, 0);
  CHECK(cs.result.f_at_rc.dec_exponent() <=
        cs.result.max_term_magnitude.dec_exponent() - 18);
}

TEST_CASE("energy derivative agrees with a centered finite difference") {
  PrecisionConfig cfg;
  for (const auto& [d, l, rcs] : {std::tuple<int, int, const char*>{3, 0, "2.5"},
                                  {1, 1, "0.5"},
                                  {4, 1, "6.0"}}) {
    cho::OscillatorState st{d, l, 0};
    auto problem = cho::make_problem(st, rcs, cfg);
    const int w = 90;
    BigReal e = cho::to_bigreal(cho::free_energy(st), w + 30) +
                BigReal::from_string("0.625", w + 30);
    BigReal h = BigReal::pow10(-w / 3, w + 30);
    ShootResult mid = cho::shoot(problem, e, w, 0);
    ShootResult up = cho::shoot(problem, e + h, w, 0);
    ShootResult dn = cho::shoot(problem, e - h, w, 0);
    BigReal fd = (up.f_at_rc - dn.f_at_rc) / (h * 2);
    BigReal rel = abs(fd - mid.df_dE_at_rc) / abs(mid.df_dE_at_rc);
    CHECK(rel < BigReal::pow10(-w / 3 + 5, 20));
  }
}

TEST_CASE("node samples see exactly n interior zeros at convergence") {
  PrecisionConfig cfg = cfg_with(30);
  for (int n : {0, 1, 2}) {
    auto problem = cho::make_problem({3, 0, n}, "2.0", cfg);
    auto r = cho::eigenvalue_series(problem, cfg);
    CHECK(r.node_count == n);
    CHECK(r.method == cho::Method::SeriesShooting);
  }
}

TEST_CASE("newton refinement reproduces published eigenvalues") {
  PrecisionConfig cfg;

  auto r1 = cho::eigenvalue_series(cho::make_problem({3, 0, 0}, "2.5", cfg), cfg);
  CHECK(r1.energy == "1.55142165455474477980579705503744668967123648964272");

  auto r2 = cho::eigenvalue_series(cho::make_problem({4, 0, 0}, "1.5", cfg), cfg);
  CHECK(r2.energy == "3.63221918840214310001312584888836494896322914146137");

  auto r3 = cho::eigenvalue_series(cho::make_problem({5, 0, 0}, "11.0", cfg), cfg);
  CHECK(r3.energy == "2.50000000000000000000000000000000000000000000000669");

  auto r4 = cho::eigenvalue_series(cho::make_problem({2, 1, 0}, "4.5", cfg), cfg);
  CHECK(r4.energy == "2.00000117823371178944821891290517013085381618885601");

  auto r5 = cho::eigenvalue_series(cho::make_problem({1, 1, 0}, "9.0", cfg), cfg);
  CHECK(r5.energy == "1.50000000000000000000000000000001071854469753799582");

  auto r6 = cho::eigenvalue_series(cho::make_problem({3, 1, 0}, "7.0", cfg), cfg);
  CHECK(r6.energy == "2.50000000000000001256563008946577023362393748249742");
}

TEST_CASE("newton converges in a handful of iterations") {
  PrecisionConfig cfg;
  auto problem = cho::make_problem({3, 0, 0}, "2.0", cfg);
  auto r = cho::eigenvalue_series(problem, cfg);
  // quadratic convergence to ~55 digits plus the node-checking shot
  CHECK(r.iterations <= 16);
  CHECK(r.working_digits_used <= cfg.max_working_digits);
}

TEST_CASE("newton from a caller-supplied bracket stays inside it") {
  PrecisionConfig cfg;
  auto problem = cho::make_problem({2, 0, 0}, "1.5", cfg);
  cho::Bracket wide;
  wide.lo = BigReal::from_string("1.4", 80);
  wide.hi = BigReal::from_string("1.7", 80);
  wide.sign_lo = cho::shoot(problem, wide.lo, 60, 0).f_at_rc.sign();
  wide.sign_hi = cho::shoot(problem, wide.hi, 60, 0).f_at_rc.sign();
  REQUIRE(wide.sign_lo != wide.sign_hi);
  auto r = cho::newton_eigenvalue(problem, BigReal::from_string("1.55", 80), wide, cfg);
  CHECK(r.energy == "1.52353226025914873036627122643288396540058580817118");
}
