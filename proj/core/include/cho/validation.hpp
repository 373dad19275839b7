#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cho/bigreal.hpp"
#include "cho/oscillator.hpp"

namespace cho {

enum class TableId { I = 1, II, III, IV, V };

/// The spatial dimension a reference table belongs to.
int table_dimension(TableId id);
std::string table_name(TableId id);
TableId parse_table_id(const std::string& name);  // throws std::invalid_argument

/// The 16-radius grid every table is tabulated on: 0.5 .. 5.0 in steps of
/// 0.5, then 6.0 .. 11.0 in steps of 1.
const std::vector<std::string>& table_radii();

/// One reference-table row, digits kept verbatim as printed (10-digit
/// groups). Rows with an annotation are shorter literature values retained
/// for comparison at their own printed length.
struct GoldenEntry {
  TableId table = TableId::I;
  OscillatorState state;
  std::string rc;
  std::string printed;     // grouped, exactly as in the data file
  std::string digits;      // normalized: groups joined, e.g. "4.95112932325413..."
  std::string annotation;  // empty for primary rows

  bool primary() const { return annotation.empty(); }
  int fractional_digits() const;
};

/// Loads `table_<id>.txt` from a data directory. Comment lines start with
/// '#'. Line format: `<r_c> <n> <l> <digit groups...> [annotation]`; every
/// group except the last must be exactly 10 digits.
std::vector<GoldenEntry> load_golden_table(const std::filesystem::path& data_dir, TableId id);

enum class Verdict { Exact, LastDigitOff, Fail };

struct AgreementReport {
  int matched_digits = 0;
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::Fail;
};

/// Rounds `value` to as many fractional digits as `expected_digits` carries
/// and compares the two decimal strings as integers: equal is Exact, a
/// difference of one unit in the last printed digit is LastDigitOff,
/// anything else is Fail.
AgreementReport compare_energy(const std::string& expected_digits, const BigReal& value);

/// Runs both backends at the same configuration and returns how many
/// fractional digits of the two eigenvalues agree (capped at the target).
int cross_validate(const ConfinementProblem& problem, const PrecisionConfig& precision);

/// Verifies that two states with equal l + D/2 and equal n produce the
/// same spectrum: the quantization parameters must match exactly (checked
/// at five energies, including bit-identical boundary values), and the two
/// solved eigenvalues must agree to at least target - 1 digits
/// (DegeneracyViolation otherwise). The returned report compares B's value
/// against A's digit string.
AgreementReport check_interdimensional(const OscillatorState& state_a,
                                       const OscillatorState& state_b, const std::string& rc,
                                       const PrecisionConfig& precision);

/// For a weakly confined state (r_c >= 9), checks that the computed
/// E - free_energy reproduces the reference row's tail digits to one unit
/// in the last printed digit. The report's expected/computed fields carry
/// the two tails.
AgreementReport check_free_limit(const GoldenEntry& entry, const PrecisionConfig& precision);

/// Solves every cell of a table with the given backend and compares against
/// the reference digits; one report per data row (annotation rows compare
/// at their own length), in file order. Cells are distributed over a worker
/// pool; the report order is deterministic.
std::vector<AgreementReport> golden_compare(TableId id, Method method,
                                            const PrecisionConfig& precision,
                                            const std::filesystem::path& data_dir,
                                            unsigned jobs = 0);

}  // namespace cho
