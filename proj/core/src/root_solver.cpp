#include "cho/root_solver.hpp"

#include <algorithm>
#include <utility>

#include "cho/detail/scan.hpp"
#include "cho/errors.hpp"
#include "cho/kummer.hpp"

namespace cho {

namespace {

// Sign scanning and the bisection phase only need enough digits for a
// certified sign; full precision is reserved for the accelerated phase.
constexpr int kScanTarget = 20;
constexpr int kBisectDigits = 10;

}  // namespace

Bracket bracket_nth_root(const ConfinementProblem& problem, const PrecisionConfig& precision) {
  precision.validate();
  int scan_digits = 0;
  auto sign_of = [&](const BigReal& e) {
    CertifiedKummer ce = boundary_function_certified(problem, e, kScanTarget, precision);
    scan_digits = std::max(scan_digits, ce.working_digits);
    return ce.eval.value.sign();
  };
  Bracket b = detail::scan_nth_root(sign_of, problem.state(), problem.rc().to_double(),
                                    problem.state().radial);
  b.scan_digits_used = scan_digits;
  return b;
}

EigenvalueResult refine_root(const ConfinementProblem& problem, const Bracket& bracket,
                             const PrecisionConfig& precision) {
  precision.validate();
  const int target = precision.target_digits;
  const int pe = target + 25;  // iterate precision: 20 digits below the stop threshold

  BigReal lo = bracket.lo.round_to(pe);
  BigReal hi = bracket.hi.round_to(pe);
  const int sign_lo = bracket.sign_lo;
  int iterations = 0;
  int digits_used = bracket.scan_digits_used;

  auto finish = [&](const BigReal& e, const BigReal& residual) {
    EigenvalueResult r;
    r.energy = e.to_fixed(target);
    r.energy_value = e;
    r.method = Method::Hypergeometric;
    r.residual = residual;
    r.node_count = bracket.roots_below;
    r.working_digits_used = digits_used;
    r.iterations = iterations;
    return r;
  };

  const BigReal one(1L, pe);
  BigReal e_prev, f_prev, e_last, f_last;
  bool have_prev = false, have_last = false;

  auto evaluate = [&](const BigReal& e, int eval_target) {
    CertifiedKummer ce = boundary_function_certified(problem, e, eval_target, precision);
    ++iterations;
    digits_used = std::max(digits_used, ce.working_digits);
    return ce;
  };

  // Bisection until the bracket pins ~10 digits.
  const BigReal coarse_tol = BigReal::pow10(-kBisectDigits, 20);
  for (;;) {
    BigReal scale = abs(hi);
    if (scale < one) scale = one;
    if (hi - lo <= coarse_tol * scale) break;
    BigReal mid = ((lo + hi) / 2).round_to(pe);
    CertifiedKummer ce = evaluate(mid, kScanTarget);
    if (ce.eval.value.is_zero()) return finish(mid, ce.eval.value);
    e_prev = std::move(e_last);
    f_prev = std::move(f_last);
    have_prev = have_last;
    e_last = std::move(mid);
    f_last = ce.eval.value;
    have_last = true;
    if (f_last.sign() == sign_lo) lo = e_last; else hi = e_last;
  }

  // Secant phase on certified full-precision values, guarded by the bracket.
  const BigReal stop_eps = BigReal::pow10(-(target + 5), 20);
  BigReal de_prev = hi - lo;
  int stalls = 0;
  for (int rounds = 0; rounds < 3000; ++rounds) {
    BigReal cand;
    bool secant_ok = false;
    if (have_prev && have_last && f_last != f_prev && stalls < 2) {
      cand = (e_last - f_last * (e_last - e_prev) / (f_last - f_prev)).round_to(pe);
      secant_ok = cand > lo && cand < hi;
    }
    if (!secant_ok) cand = ((lo + hi) / 2).round_to(pe);

    CertifiedKummer ce = evaluate(cand, target);
    if (ce.eval.value.is_zero()) return finish(cand, ce.eval.value);
    if (ce.eval.value.sign() == sign_lo) lo = cand; else hi = cand;

    BigReal de = have_last ? abs(cand - e_last) : hi - lo;
    BigReal scale = abs(cand);
    if (scale < one) scale = one;
    bool converged = have_last && de < stop_eps * scale;

    e_prev = std::move(e_last);
    f_prev = std::move(f_last);
    have_prev = have_last;
    e_last = std::move(cand);
    f_last = ce.eval.value;
    have_last = true;
    if (converged) return finish(e_last, ce.eval.value);

    // Regula-falsi style stagnation: force bisection when steps stop shrinking.
    if (de * 2 > de_prev) ++stalls; else stalls = 0;
    de_prev = std::move(de);
  }
  throw SolverError("root refinement exceeded its iteration budget");
}

EigenvalueResult eigenvalue_hypergeometric(const ConfinementProblem& problem,
                                           const PrecisionConfig& precision) {
  return refine_root(problem, bracket_nth_root(problem, precision), precision);
}

}  // namespace cho
