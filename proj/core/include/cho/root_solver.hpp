#pragma once

#include "cho/bigreal.hpp"
#include "cho/oscillator.hpp"

namespace cho {

/// An energy interval known to contain exactly one root of the boundary
/// function, plus the number of roots found below it during scanning.
struct Bracket {
  BigReal lo;
  BigReal hi;
  int sign_lo = 0;
  int sign_hi = 0;
  int roots_below = 0;
  int scan_digits_used = 0;  // widest working precision the scan needed
};

/// Scans E upward from just below the bottom of the spectrum (l + D/2 - 1/2)
/// and brackets the (n+1)-th sign change of the boundary function. Signs are
/// taken at a reduced 20-digit target; the step starts at 1 and is halved
/// whenever a probe shows more than one sign change inside a step.
///
/// Throws ScanExhausted past E = free_energy + 40(n+1)(1 + 1/r_c^2).
Bracket bracket_nth_root(const ConfinementProblem& problem, const PrecisionConfig& precision);

/// Refines a bracket to the configured target: bisection (reduced-precision
/// signs) down to ~10 digits, then bracket-guarded secant steps on certified
/// full-precision values until successive iterates differ by less than
/// 10^-(target+5) relative.
EigenvalueResult refine_root(const ConfinementProblem& problem, const Bracket& bracket,
                             const PrecisionConfig& precision);

/// bracket_nth_root followed by refine_root.
EigenvalueResult eigenvalue_hypergeometric(const ConfinementProblem& problem,
                                           const PrecisionConfig& precision);

}  // namespace cho
