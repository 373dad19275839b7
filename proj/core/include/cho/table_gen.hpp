#pragma once

#include <string>
#include <vector>

#include "cho/oscillator.hpp"
#include "cho/validation.hpp"

namespace cho {

/// One solved cell as the CLI reports it. Serialization is byte-stable for
/// identical inputs; elapsed time is therefore kept out of every rendered
/// form and reported separately (stderr).
struct OutputRecord {
  int dimension = 0;
  int angular = 0;
  int radial = 0;
  std::string rc;
  std::string energy;
  std::string method;
  int digits = 0;
  int residual_exponent = 0;  // decimal exponent of |residual|; 0 residual -> INT_MIN
  double elapsed_seconds = 0.0;
};

OutputRecord make_record(const std::string& rc, const OscillatorState& state,
                         const EigenvalueResult& result, int digits, double elapsed_seconds);

std::string to_json(const OutputRecord& record);
std::string to_json(const std::vector<OutputRecord>& records);

/// Regenerates a full reference table (both states, all 16 radii) with one
/// backend, distributing cells over a worker pool.
std::vector<OutputRecord> generate_table(TableId id, Method method,
                                         const PrecisionConfig& precision, unsigned jobs = 0);

/// Golden-file line format: `<r_c> <n> <l> <groups of 10 digits>`.
std::string render_paper(const std::vector<OutputRecord>& records);
std::string render_csv(const std::vector<OutputRecord>& records);

struct PaperRow {
  std::string rc;
  int radial = 0;
  int angular = 0;
  std::string digits;  // normalized decimal string
};

/// Parses the `paper` format back; inverse of render_paper up to comments.
std::vector<PaperRow> parse_paper(const std::string& text);

/// Groups a fixed-point decimal string into 10-digit blocks after the point.
std::string group_digits(const std::string& fixed);

}  // namespace cho
