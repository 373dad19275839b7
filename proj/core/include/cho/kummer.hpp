#pragma once

#include "cho/bigreal.hpp"
#include "cho/oscillator.hpp"
#include "cho/rational.hpp"

namespace cho {

/// One confluent-hypergeometric series evaluation, with the bookkeeping
/// needed to certify how many of its digits survived cancellation.
struct KummerEval {
  BigReal value;
  BigReal max_term_magnitude;
  long terms_summed = 0;
  int lost_digits = 0;
  /// True when the series ended on an exactly-zero term (a a nonpositive
  /// integer): the value is an exact polynomial evaluation, not an
  /// approximation, and zero values must not trigger escalation.
  bool terminated = false;
};

/// 1F1(a; b; z) by direct series summation at the given working precision.
///
/// Terms are generated multiplicatively, term_{k+1} = term_k * (a+k)/(b+k)
/// * z/(k+1). At least ceil(z) + ceil(|a|) + 10 terms are summed; after
/// that the sum stops once three consecutive terms are each below
/// 10^-W * max(|sum|, max_term * 10^-W). Requires b > 0, z >= 0, W >= 10.
///
/// Throws NonConvergence past 20*(z + |a| + 50) terms.
KummerEval kummer_1f1(const BigReal& a, const Rational& b, const BigReal& z, int working_digits);

/// The quantization left-hand side: 1F1 at kummer_params(state, E), z = r_c^2.
KummerEval boundary_function(const ConfinementProblem& problem, const BigReal& energy,
                             int working_digits);

struct CertifiedKummer {
  KummerEval eval;
  int working_digits = 0;
};

/// Evaluates the boundary function with enough working precision that at
/// least `target + 10` digits of the value survive cancellation, escalating
/// by the configured factor up to max_working_digits.
///
/// Throws PrecisionExceeded when the cap is hit before certification.
CertifiedKummer boundary_function_certified(const ConfinementProblem& problem,
                                            const BigReal& energy, int target,
                                            const PrecisionConfig& precision);

}  // namespace cho
