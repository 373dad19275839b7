#pragma once

#include <utility>

#include "cho/bigreal.hpp"
#include "cho/errors.hpp"
#include "cho/oscillator.hpp"
#include "cho/root_solver.hpp"

namespace cho::detail {

// Grid arithmetic precision for scan points. All points are half-integers
// plus dyadic steps, so they are represented exactly at this precision.
inline constexpr int kScanGridDigits = 60;

// Walks E upward from (l + D/2) - 1/2, which lies strictly below the whole
// confined spectrum, counting sign changes of `sign_of` until the (n+1)-th
// is isolated. `sign_of` must return a certified -1/0/+1 (0 only when the
// value is exactly zero, i.e. the probe landed on a root).
//
// Step control: each sign-changing step is probed at its quarter points;
// if the five-point sign sequence shows more than one change, the step is
// halved and the interval rescanned. Two roots inside a same-sign step are
// undetectable from samples, and cannot occur here: level spacing within
// one (D, l) family is at least 2 (its free-limit value, which confinement
// only widens), versus a maximum step of 1.
template <typename SignFn>
Bracket scan_nth_root(SignFn&& sign_of, const OscillatorState& state, double rc_hint,
                      int wanted_root) {
  const Rational bottom = kummer_b(state) - make_rational(1, 2);
  const double exhaust_bound = free_energy(state).get_d() +
                               40.0 * (wanted_root + 1) * (1.0 + 1.0 / (rc_hint * rc_hint));

  // Resolves a probe that landed exactly on a root into a proper bracket.
  auto pinch = [&](const BigReal& root_at, const BigReal& width, int roots_below) -> Bracket {
    BigReal delta = width / 1024;
    for (;;) {
      BigReal lo = root_at - delta;
      BigReal hi = root_at + delta;
      int slo = sign_of(lo);
      int shi = sign_of(hi);
      if (slo != 0 && shi != 0 && slo != shi) {
        return {std::move(lo), std::move(hi), slo, shi, roots_below};
      }
      delta /= 2;
    }
  };

  BigReal e = to_bigreal(bottom, kScanGridDigits);
  BigReal step(1L, kScanGridDigits);
  int sign_here = sign_of(e);  // always +1: every series term is positive below the spectrum
  int changes = 0;

  for (;;) {
    if (e.to_double() > exhaust_bound) {
      throw ScanExhausted("no sign change " + std::to_string(changes + 1) + " of " +
                          std::to_string(wanted_root + 1) + " below E=" +
                          std::to_string(exhaust_bound));
    }

    BigReal e_next = e + step;
    int sign_next = sign_of(e_next);

    if (sign_next == 0) {
      if (changes == wanted_root) return pinch(e_next, step, changes);
      ++changes;
      // Resume just past the root with a freshly evaluated sign.
      BigReal nudge = step / 1024;
      for (;;) {
        BigReal resumed = e_next + nudge;
        int s = sign_of(resumed);
        if (s != 0) {
          e = std::move(resumed);
          sign_here = s;
          break;
        }
        nudge /= 2;
      }
      continue;
    }

    if (sign_next == sign_here) {
      e = std::move(e_next);
      continue;
    }

    // One sign change somewhere in [e, e_next]; probe quarter points.
    BigReal quarter = step / 4;
    BigReal points[5] = {e, e + quarter, e + quarter * 2, e + quarter * 3, e_next};
    int signs[5] = {sign_here, 0, 0, 0, sign_next};
    bool hit_root = false;
    for (int i = 1; i <= 3 && !hit_root; ++i) {
      signs[i] = sign_of(points[i]);
      if (signs[i] == 0) {
        if (changes == wanted_root) return pinch(points[i], quarter, changes);
        hit_root = true;
        ++changes;
        BigReal nudge = quarter / 1024;
        for (;;) {
          BigReal resumed = points[i] + nudge;
          int s = sign_of(resumed);
          if (s != 0) {
            e = std::move(resumed);
            sign_here = s;
            break;
          }
          nudge /= 2;
        }
      }
    }
    if (hit_root) continue;

    int flips = 0;
    int flip_at = 0;
    for (int i = 0; i < 4; ++i) {
      if (signs[i] != signs[i + 1]) {
        ++flips;
        flip_at = i;
      }
    }
    if (flips > 1) {
      step /= 2;
      continue;  // rescan [e, ...] with the finer step
    }

    if (changes == wanted_root) {
      return {points[flip_at], points[flip_at + 1], signs[flip_at], signs[flip_at + 1], changes};
    }
    ++changes;
    e = std::move(e_next);
    sign_here = sign_next;
  }
}

}  // namespace cho::detail
