#include "cho/table_gen.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "cho/detail/parallel.hpp"
#include "cho/root_solver.hpp"
#include "cho/series_shooting.hpp"

namespace cho {

namespace {

nlohmann::ordered_json record_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["dimension"] = r.dimension;
  j["l"] = r.angular;
  j["n"] = r.radial;
  j["rc"] = r.rc;
  j["energy"] = r.energy;
  j["method"] = r.method;
  j["digits"] = r.digits;
  if (r.residual_exponent == INT_MIN) {
    j["residual_exponent"] = nullptr;  // residual exactly zero
  } else {
    j["residual_exponent"] = r.residual_exponent;
  }
  return j;
}

}  // namespace

OutputRecord make_record(const std::string& rc, const OscillatorState& state,
                         const EigenvalueResult& result, int digits, double elapsed_seconds) {
  OutputRecord rec;
  rec.dimension = state.dimension;
  rec.angular = state.angular;
  rec.radial = state.radial;
  rec.rc = rc;
  rec.energy = result.energy;
  rec.method = std::string(method_name(result.method));
  rec.digits = digits;
  long e = result.residual.is_zero() ? LONG_MIN : result.residual.dec_exponent();
  rec.residual_exponent = e <= INT_MIN ? INT_MIN : static_cast<int>(e);
  rec.elapsed_seconds = elapsed_seconds;
  return rec;
}

std::string to_json(const OutputRecord& record) { return record_json(record).dump(2); }

std::string to_json(const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return arr.dump(2);
}

std::vector<OutputRecord> generate_table(TableId id, Method method,
                                         const PrecisionConfig& precision, unsigned jobs) {
  precision.validate();
  const auto& radii = table_radii();
  struct Cell {
    OscillatorState state;
    std::string rc;
  };
  std::vector<Cell> cells;
  for (int l : {0, 1}) {
    for (const auto& rc : radii) {
      cells.push_back({OscillatorState{table_dimension(id), l, 0}, rc});
    }
  }
  return detail::parallel_map<OutputRecord>(cells.size(), jobs, [&](std::size_t i) {
    ConfinementProblem problem = make_problem(cells[i].state, cells[i].rc, precision);
    EigenvalueResult res = method == Method::Hypergeometric
                               ? eigenvalue_hypergeometric(problem, precision)
                               : eigenvalue_series(problem, precision);
    return make_record(cells[i].rc, cells[i].state, res, precision.target_digits, 0.0);
  });
}

std::string group_digits(const std::string& fixed) {
  auto dot = fixed.find('.');
  if (dot == std::string::npos) return fixed;
  std::string out = fixed.substr(0, dot + 1);
  std::string frac = fixed.substr(dot + 1);
  for (std::size_t i = 0; i < frac.size(); i += 10) {
    if (i) out += ' ';
    out += frac.substr(i, 10);
  }
  return out;
}

std::string render_paper(const std::vector<OutputRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    out << r.rc << ' ' << r.radial << ' ' << r.angular << ' ' << group_digits(r.energy) << '\n';
  }
  return out.str();
}

std::string render_csv(const std::vector<OutputRecord>& records) {
  std::ostringstream out;
  out << "rc,n,l,energy\n";
  for (const auto& r : records) {
    out << r.rc << ',' << r.radial << ',' << r.angular << ',' << r.energy << '\n';
  }
  return out.str();
}

std::vector<PaperRow> parse_paper(const std::string& text) {
  std::vector<PaperRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::istringstream fields(trimmed);
    PaperRow row;
    if (!(fields >> row.rc >> row.radial >> row.angular)) {
      throw std::invalid_argument("bad table row: " + line);
    }
    std::string group;
    while (fields >> group) row.digits += group;
    if (row.digits.find('.') == std::string::npos) {
      throw std::invalid_argument("row without energy digits: " + line);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cho
