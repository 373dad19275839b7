#include "cho/series_shooting.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "cho/detail/diagnostics.hpp"
#include "cho/detail/scan.hpp"
#include "cho/errors.hpp"

namespace cho {

namespace {

constexpr int kScanTarget = 20;

int count_sign_changes(const std::vector<std::pair<BigReal, int>>& samples) {
  int changes = 0;
  int last = 0;
  for (const auto& [r, s] : samples) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

ShootResult shoot(const ConfinementProblem& problem, const BigReal& energy, int working_digits,
                  int node_grid) {
  if (working_digits < BigReal::kMinDigits) {
    throw std::invalid_argument("shoot requires working_digits >= 10");
  }
  if (node_grid < 0) throw std::invalid_argument("node_grid must be >= 0");
  const int w = working_digits;
  const OscillatorState& st = problem.state();

  const BigReal u = problem.z().round_to(w);
  const BigReal e_w = energy.round_to(std::max(w, energy.precision_digits()));
  const BigReal b_prime = to_bigreal(kummer_b(st), w);
  const long two_l_plus_d = 2L * st.angular + st.dimension;

  const double z_d = u.to_double();
  const double a_d = std::fabs((kummer_b(st).get_d() - energy.to_double()) / 2.0);
  const long min_pairs = static_cast<long>(std::ceil(z_d) + std::ceil(a_d)) + 10;
  const long ceiling = static_cast<long>(20.0 * (z_d + a_d + 50.0));

  BigReal t(1L, w);        // T_p
  BigReal td(0L, w);       // dT_p/dE
  BigReal sum_f(1L, w);
  BigReal sum_df(0L, w);
  BigReal max_t(1L, w);
  BigReal max_td(0L, w);
  const BigReal eps = BigReal::pow10(-w, w);

  // r-independent coefficients of F as a polynomial in r^2, kept only when
  // node sampling was requested.
  std::vector<BigReal> coeffs;
  BigReal coeff(1L, w);
  if (node_grid > 0) coeffs.push_back(coeff);

  ShootResult out;
  out.terms_summed = 1;

  bool t_alive = true;
  int small_run = 0;
  for (long p = 0;; p += 2) {
    BigReal q = b_prime + p - e_w;      // (p + l + D/2 - E)
    const long den = (p + 2) * (p + two_l_plus_d);

    BigReal t_next = q * t;
    t_next *= 2;
    t_next *= u;
    t_next /= den;

    BigReal td_next = q * td;
    td_next -= t;
    td_next *= 2;
    td_next *= u;
    td_next /= den;

    t = std::move(t_next);
    td = std::move(td_next);

    if (t_alive && t.is_zero()) {
      t_alive = false;
      out.terminated = true;  // F is a polynomial; sum_f is exact from here on
    }
    if (!t_alive && td.is_zero()) break;

    sum_f += t;
    sum_df += td;
    ++out.terms_summed;
    if (node_grid > 0) {
      coeff *= q;
      coeff *= 2;
      coeff /= den;
      coeffs.push_back(coeff);
    }

    BigReal t_mag = abs(t);
    BigReal td_mag = abs(td);
    if (t_mag > max_t) max_t = t_mag;
    if (td_mag > max_td) max_td = td_mag;

    if (out.terms_summed >= min_pairs) {
      BigReal f_scale = abs(sum_f);
      BigReal f_floor = max_t * eps;
      if (f_scale < f_floor) f_scale = f_floor;
      BigReal df_scale = abs(sum_df);
      BigReal df_floor = max_td * eps;
      if (df_scale < df_floor) df_scale = df_floor;
      if (t_mag < eps * f_scale && td_mag < eps * df_scale) {
        if (++small_run == 3) break;
      } else {
        small_run = 0;
      }
    }
    if (out.terms_summed > ceiling) {
      throw NonConvergence("Taylor series exceeded its term ceiling (r_c^2=" + u.to_sci(4) +
                           ", W=" + std::to_string(w) + ")");
    }
  }

  if (node_grid > 0) {
    out.node_samples.reserve(node_grid);
    for (int j = 1; j <= node_grid; ++j) {
      BigReal r = problem.rc().round_to(w) * j;
      r /= node_grid + 1;
      BigReal uj = r * r;
      BigReal f(0L, w);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        f *= uj;
        f += *it;
      }
      out.node_samples.emplace_back(r.round_to(detail::kScanGridDigits), f.sign());
    }
  }

  out.f_at_rc = std::move(sum_f);
  out.df_dE_at_rc = std::move(sum_df);
  out.max_term_magnitude = std::move(max_t);
  out.lost_digits = detail::lost_digits_estimate(out.max_term_magnitude, out.f_at_rc, w);
  return out;
}

CertifiedShoot shoot_certified(const ConfinementProblem& problem, const BigReal& energy,
                               int target, const PrecisionConfig& precision, int node_grid) {
  int w = precision.initial_working_digits(target, problem.z().to_double());
  for (;;) {
    ShootResult r = shoot(problem, energy, w, node_grid);
    if (r.terminated && r.f_at_rc.is_zero()) return {std::move(r), w};
    if (w - r.lost_digits >= target + 10) return {std::move(r), w};
    auto next = precision.escalate(w);
    if (!next) {
      throw PrecisionExceeded("series factor lost " + std::to_string(r.lost_digits) + " of " +
                              std::to_string(w) + " digits at the " +
                              std::to_string(precision.max_working_digits) + "-digit cap");
    }
    w = *next;
  }
}

EigenvalueResult newton_eigenvalue(const ConfinementProblem& problem, const BigReal& energy_init,
                                   const Bracket& bracket, const PrecisionConfig& precision) {
  precision.validate();
  const int target = precision.target_digits;
  const int pe = target + 25;
  const int wanted_nodes = problem.state().radial;

  BigReal lo = bracket.lo.round_to(pe);
  BigReal hi = bracket.hi.round_to(pe);
  const int sign_lo = bracket.sign_lo;
  int iterations = 0;
  int digits_used = bracket.scan_digits_used;

  const BigReal one(1L, pe);
  const BigReal stop_eps = BigReal::pow10(-(target + 5), 20);

  BigReal e = energy_init.round_to(pe);
  bool converged = false;
  for (int rounds = 0; rounds < 3000 && !converged; ++rounds) {
    CertifiedShoot cs = shoot_certified(problem, e, target, precision, 0);
    ++iterations;
    digits_used = std::max(digits_used, cs.working_digits);

    if (cs.result.f_at_rc.is_zero()) {
      converged = true;  // landed exactly on the root
      break;
    }
    if (cs.result.f_at_rc.sign() == sign_lo) lo = e; else hi = e;

    BigReal cand;
    if (!cs.result.df_dE_at_rc.is_zero()) {
      cand = (e - cs.result.f_at_rc / cs.result.df_dE_at_rc).round_to(pe);
      if (!(cand > lo && cand < hi)) cand = ((lo + hi) / 2).round_to(pe);
    } else {
      cand = ((lo + hi) / 2).round_to(pe);
    }

    BigReal scale = abs(cand);
    if (scale < one) scale = one;
    converged = abs(cand - e) < stop_eps * scale;
    e = std::move(cand);
  }
  if (!converged) throw SolverError("Newton iteration exceeded its budget");

  // Final certified shot doubles as residual and node check.
  int grid = 64 * (wanted_nodes + 2);
  CertifiedShoot fin = shoot_certified(problem, e, target, precision, grid);
  ++iterations;
  digits_used = std::max(digits_used, fin.working_digits);
  int nodes = count_sign_changes(fin.result.node_samples);
  if (nodes != wanted_nodes) {
    fin = shoot_certified(problem, e, target, precision, grid * 4);
    ++iterations;
    nodes = count_sign_changes(fin.result.node_samples);
    if (nodes != wanted_nodes) {
      throw NodeMismatch("converged state has " + std::to_string(nodes) + " nodes, expected " +
                         std::to_string(wanted_nodes));
    }
  }

  EigenvalueResult r;
  r.energy = e.to_fixed(target);
  r.energy_value = e;
  r.method = Method::SeriesShooting;
  r.residual = fin.result.f_at_rc;
  r.node_count = nodes;
  r.working_digits_used = digits_used;
  r.iterations = iterations;
  return r;
}

EigenvalueResult eigenvalue_series(const ConfinementProblem& problem,
                                   const PrecisionConfig& precision) {
  precision.validate();
  int scan_digits = 0;
  auto sign_of = [&](const BigReal& e) {
    CertifiedShoot cs = shoot_certified(problem, e, kScanTarget, precision, 0);
    scan_digits = std::max(scan_digits, cs.working_digits);
    return cs.result.f_at_rc.sign();
  };
  Bracket b = detail::scan_nth_root(sign_of, problem.state(), problem.rc().to_double(),
                                    problem.state().radial);
  b.scan_digits_used = scan_digits;
  BigReal mid = (b.lo + b.hi) / 2;
  return newton_eigenvalue(problem, mid, b, precision);
}

}  // namespace cho
