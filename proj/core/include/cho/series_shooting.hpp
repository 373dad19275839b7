#pragma once

#include <utility>
#include <vector>

#include "cho/bigreal.hpp"
#include "cho/oscillator.hpp"
#include "cho/root_solver.hpp"

namespace cho {

/// One shot of the Taylor-series integration: the value of the peeled
/// radial factor F at the wall, its energy derivative, and sign samples of
/// F on an interior grid for node counting.
///
/// F is the factor in R = r^l exp(-r^2/2) F, so F(r_c) = 0 is equivalent
/// to the wavefunction vanishing at the wall, and F carries exactly n
/// interior zeros. Seeds are F(0) = 1, dF/dE(0) = 0; the recurrences
/// advance in steps of two, so only even powers contribute.
struct ShootResult {
  BigReal f_at_rc;
  BigReal df_dE_at_rc;
  BigReal max_term_magnitude;
  long terms_summed = 0;
  std::vector<std::pair<BigReal, int>> node_samples;  // (radius, sign of F)
  int lost_digits = 0;
  bool terminated = false;  // the T-series ended on an exactly-zero term
};

/// Sums the coefficient recurrences
///   T_{p+2}  = 2 (p + l + D/2 - E) r^2 / ((p+2)(p+2l+D)) T_p
///   T'_{p+2} = 2 [(p + l + D/2 - E) T'_p - T_p] r^2 / ((p+2)(p+2l+D))
/// at the given working precision, with the same minimum-term and
/// three-small-terms stopping rule as the hypergeometric series. When
/// node_grid > 0, F is also sign-sampled at that many equally spaced radii
/// in (0, r_c).
ShootResult shoot(const ConfinementProblem& problem, const BigReal& energy, int working_digits,
                  int node_grid);

struct CertifiedShoot {
  ShootResult result;
  int working_digits = 0;
};

/// shoot() under the cancellation-escalation policy (certified to
/// target + 10 surviving digits of F, or PrecisionExceeded).
CertifiedShoot shoot_certified(const ConfinementProblem& problem, const BigReal& energy,
                               int target, const PrecisionConfig& precision, int node_grid);

/// Bracket-guarded Newton-Raphson on F(r_c; E) from the given starting
/// point, stepping E by -F/(dF/dE) and bisecting whenever a step leaves
/// the bracket. Converges when successive iterates differ by less than
/// 10^-(target+5) relative; the converged state is node-checked against
/// the requested radial number (NodeMismatch otherwise).
EigenvalueResult newton_eigenvalue(const ConfinementProblem& problem, const BigReal& energy_init,
                                   const Bracket& bracket, const PrecisionConfig& precision);

/// Self-contained pipeline: a reduced-precision sign scan over E using the
/// series itself (never the hypergeometric backend) brackets the n-th
/// root, and Newton-Raphson starts from the bracket midpoint.
EigenvalueResult eigenvalue_series(const ConfinementProblem& problem,
                                   const PrecisionConfig& precision);

}  // namespace cho
