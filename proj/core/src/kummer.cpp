#include "cho/kummer.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

#include "cho/detail/diagnostics.hpp"
#include "cho/errors.hpp"

namespace cho {

namespace {

}  // namespace

KummerEval kummer_1f1(const BigReal& a, const Rational& b, const BigReal& z, int working_digits) {
  if (b <= 0) throw std::invalid_argument("kummer_1f1 requires b > 0");
  if (z.sign() < 0) throw std::invalid_argument("kummer_1f1 requires z >= 0");
  if (working_digits < BigReal::kMinDigits) {
    throw std::invalid_argument("kummer_1f1 requires working_digits >= 10");
  }
  const int w = working_digits;

  const double z_d = z.to_double();
  const double a_d = std::fabs(a.to_double());
  const long min_terms = static_cast<long>(std::ceil(z_d) + std::ceil(a_d)) + 10;
  const long ceiling = static_cast<long>(20.0 * (z_d + a_d + 50.0));

  BigReal term(1L, w);
  BigReal sum(1L, w);
  BigReal max_term(1L, w);
  BigReal ak = a.round_to(w);
  BigReal bk = to_bigreal(b, w);
  const BigReal zw = z.round_to(w);
  const BigReal eps = BigReal::pow10(-w, w);

  KummerEval out;
  out.terms_summed = 1;

  int small_run = 0;
  for (long k = 0;; ++k) {
    term *= ak;
    term /= bk;
    term *= zw;
    term /= k + 1;
    ak += 1;
    bk += 1;

    if (term.is_zero()) {
      // (a + k) crossed zero exactly: the series is a polynomial and the
      // partial sum is already its exact value.
      out.terminated = true;
      break;
    }

    sum += term;
    ++out.terms_summed;
    BigReal tmag = abs(term);
    if (tmag > max_term) max_term = tmag;

    if (out.terms_summed >= min_terms) {
      // Threshold floor: near a root the sum itself is tiny, so smallness
      // is also measured against max_term scaled to the noise level.
      BigReal floor_mag = max_term * eps;
      BigReal scale = abs(sum);
      if (scale < floor_mag) scale = floor_mag;
      if (tmag < eps * scale) {
        if (++small_run == 3) break;
      } else {
        small_run = 0;
      }
    }
    if (out.terms_summed > ceiling) {
      throw NonConvergence("1F1 series exceeded its term ceiling (z=" + z.to_sci(4) +
                           ", |a|~" + std::to_string(a_d) + ", W=" + std::to_string(w) + ")");
    }
  }

  out.value = sum;
  out.max_term_magnitude = max_term;
  out.lost_digits = detail::lost_digits_estimate(max_term, sum, w);
  return out;
}

KummerEval boundary_function(const ConfinementProblem& problem, const BigReal& energy,
                             int working_digits) {
  KummerParams p = kummer_params(problem.state(), energy);
  return kummer_1f1(p.a, p.b, problem.z(), working_digits);
}

CertifiedKummer boundary_function_certified(const ConfinementProblem& problem,
                                            const BigReal& energy, int target,
                                            const PrecisionConfig& precision) {
  int w = precision.initial_working_digits(target, problem.z().to_double());
  for (;;) {
    KummerEval eval = boundary_function(problem, energy, w);
    if (eval.terminated && eval.value.is_zero()) return {std::move(eval), w};
    if (w - eval.lost_digits >= target + 10) return {std::move(eval), w};
    auto next = precision.escalate(w);
    if (!next) {
      throw PrecisionExceeded("boundary function lost " + std::to_string(eval.lost_digits) +
                              " of " + std::to_string(w) + " digits at the " +
                              std::to_string(precision.max_working_digits) + "-digit cap");
    }
    w = *next;
  }
}

}  // namespace cho
