#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cho/bigreal.hpp"
#include "cho/errors.hpp"
#include "cho/rational.hpp"

namespace cho {

/// Precision policy: how many digits are reported, how many guard digits
/// are carried, and how far the cancellation-recovery escalation may go.
struct PrecisionConfig {
  int target_digits = 50;
  int base_guard_digits = 30;
  int max_working_digits = 400;
  // escalation factor 3/2, kept as a ratio so the growth is exact
  int escalation_num = 3;
  int escalation_den = 2;

  void validate() const;

  /// Working precision for a fresh evaluation at argument z: the requested
  /// digits, the base guard, and one digit per factor of 10 the largest
  /// series term can rise above the sum (~ z*log10 e).
  int initial_working_digits(int target, double z_hint) const;

  /// Next working precision after a certification failure, or nullopt once
  /// the cap is reached.
  std::optional<int> escalate(int working_digits) const;
};

/// Quantum numbers. For dimension 1 the angular number encodes parity
/// (0 = even, 1 = odd) and the radial number still indexes successive
/// roots within that parity family.
struct OscillatorState {
  int dimension = 1;
  int angular = 0;
  int radial = 0;

  void validate() const;

  friend bool operator==(const OscillatorState&, const OscillatorState&) = default;
};

/// l + D/2 as an exact half-integer; the second Kummer parameter and the
/// only combination through which the boundary condition sees l and D.
Rational kummer_b(const OscillatorState& state);

/// Unconfined eigenvalue 2n + l + D/2, exact.
Rational free_energy(const OscillatorState& state);

struct KummerParams {
  BigReal a;
  Rational b;
};

/// Parameters of the quantization condition 1F1(a; b; r_c^2) = 0:
/// a = (l + D/2 - E)/2, b = l + D/2. Total on valid states; the D=1
/// parity cases fall out of the same formula.
KummerParams kummer_params(const OscillatorState& state, const BigReal& energy);

/// A state confined to radius r_c. The square z = r_c^2 is computed once,
/// at the precision r_c was parsed with, and cached.
class ConfinementProblem {
 public:
  ConfinementProblem(OscillatorState state, BigReal rc);

  const OscillatorState& state() const { return state_; }
  const BigReal& rc() const { return rc_; }
  const BigReal& z() const { return z_; }

 private:
  OscillatorState state_;
  BigReal rc_;
  BigReal z_;
};

/// Parses r_c as a decimal string at the configuration's maximum working
/// precision (so every later rounding is downward only).
ConfinementProblem make_problem(const OscillatorState& state, std::string_view rc_decimal,
                                const PrecisionConfig& precision);

enum class Method { Hypergeometric, SeriesShooting };

std::string_view method_name(Method m);

struct EigenvalueResult {
  std::string energy;      // exactly target_digits fractional digits
  BigReal energy_value;    // unrounded value at final working precision
  Method method = Method::Hypergeometric;
  BigReal residual;        // boundary function at the reported energy
  int node_count = 0;
  int working_digits_used = 0;
  int iterations = 0;
};

}  // namespace cho
