#include "cho/oscillator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cho {

void PrecisionConfig::validate() const {
  if (target_digits < 1) throw std::invalid_argument("target_digits must be >= 1");
  if (base_guard_digits < 1) throw std::invalid_argument("base_guard_digits must be >= 1");
  if (max_working_digits < target_digits + base_guard_digits) {
    throw std::invalid_argument("max_working_digits must be >= target_digits + base_guard_digits");
  }
  if (escalation_num <= escalation_den || escalation_den < 1) {
    throw std::invalid_argument("escalation factor must exceed 1");
  }
}

int PrecisionConfig::initial_working_digits(int target, double z_hint) const {
  constexpr double kLog10OfE = 0.43429448190325176;
  int w = target + base_guard_digits + static_cast<int>(std::ceil(z_hint * kLog10OfE));
  w = std::max(w, BigReal::kMinDigits);
  return std::min(w, max_working_digits);
}

std::optional<int> PrecisionConfig::escalate(int working_digits) const {
  if (working_digits >= max_working_digits) return std::nullopt;
  long next = (static_cast<long>(working_digits) * escalation_num + escalation_den - 1) /
              escalation_den;
  return static_cast<int>(std::min<long>(next, max_working_digits));
}

void OscillatorState::validate() const {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (angular < 0) throw std::invalid_argument("angular number must be >= 0");
  if (radial < 0) throw std::invalid_argument("radial number must be >= 0");
  if (dimension == 1 && angular > 1) {
    throw std::invalid_argument("for dimension 1 the angular number encodes parity (0 or 1)");
  }
}

Rational kummer_b(const OscillatorState& state) {
  return make_rational(2L * state.angular + state.dimension, 2);
}

Rational free_energy(const OscillatorState& state) {
  return make_rational(4L * state.radial + 2L * state.angular + state.dimension, 2);
}

KummerParams kummer_params(const OscillatorState& state, const BigReal& energy) {
  Rational b = kummer_b(state);
  BigReal a = (to_bigreal(b, energy.precision_digits()) - energy) / 2;
  return {std::move(a), std::move(b)};
}

ConfinementProblem::ConfinementProblem(OscillatorState state, BigReal rc)
    : state_(state), rc_(std::move(rc)), z_(rc_ * rc_) {
  state_.validate();
  if (rc_.sign() <= 0) throw std::invalid_argument("confinement radius must be positive");
}

ConfinementProblem make_problem(const OscillatorState& state, std::string_view rc_decimal,
                                const PrecisionConfig& precision) {
  precision.validate();
  return {state, BigReal::from_string(rc_decimal, precision.max_working_digits)};
}

std::string_view method_name(Method m) {
  return m == Method::Hypergeometric ? "hypergeometric" : "series-shooting";
}

}  // namespace cho
