#pragma once

#include <algorithm>

#include "cho/bigreal.hpp"

namespace cho::detail {

// ceil(log10(max_term / |value|)), estimated conservatively from decimal
// exponents (may overstate by one; never understates by more than the
// exponent granularity). Zero when the sum dominates its largest term,
// the full working precision when the value is exactly zero.
inline int lost_digits_estimate(const BigReal& max_term, const BigReal& value,
                                int working_digits) {
  if (value.is_zero()) return working_digits;
  BigReal mag = abs(value);
  if (mag >= max_term) return 0;
  long lost = max_term.dec_exponent() - mag.dec_exponent() + 1;
  lost = std::clamp<long>(lost, 1, working_digits);
  return static_cast<int>(lost);
}

}  // namespace cho::detail
