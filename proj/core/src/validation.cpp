#include "cho/validation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "cho/detail/parallel.hpp"
#include "cho/detail/scan.hpp"
#include "cho/errors.hpp"
#include "cho/kummer.hpp"
#include "cho/rational.hpp"
#include "cho/root_solver.hpp"
#include "cho/series_shooting.hpp"

namespace cho {

namespace {

std::string strip_dot(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '.'), s.end());
  return s;
}

int fractional_count(const std::string& digits) {
  auto dot = digits.find('.');
  if (dot == std::string::npos) return 0;
  return static_cast<int>(digits.size() - dot - 1);
}

// tail * 10^-scale rendered as d.ddd...e-k
std::string render_tail(const mpz_class& tail, int scale) {
  if (tail == 0) return "0";
  std::string d = tail.get_str();
  long exp10 = static_cast<long>(d.size()) - 1 - scale;
  std::string mant = d.substr(0, 1);
  if (d.size() > 1) mant += "." + d.substr(1);
  return mant + "e" + std::to_string(exp10);
}

EigenvalueResult solve(const ConfinementProblem& problem, Method method,
                       const PrecisionConfig& precision) {
  return method == Method::Hypergeometric ? eigenvalue_hypergeometric(problem, precision)
                                          : eigenvalue_series(problem, precision);
}

}  // namespace

int table_dimension(TableId id) { return static_cast<int>(id); }

std::string table_name(TableId id) {
  switch (id) {
    case TableId::I: return "I";
    case TableId::II: return "II";
    case TableId::III: return "III";
    case TableId::IV: return "IV";
    case TableId::V: return "V";
  }
  throw std::invalid_argument("bad table id");
}

TableId parse_table_id(const std::string& name) {
  for (TableId id : {TableId::I, TableId::II, TableId::III, TableId::IV, TableId::V}) {
    if (name == table_name(id)) return id;
  }
  throw std::invalid_argument("unknown table '" + name + "' (expected I..V)");
}

const std::vector<std::string>& table_radii() {
  static const std::vector<std::string> radii = [] {
    std::vector<std::string> r;
    for (int k = 1; k <= 10; ++k) {
      r.push_back(std::to_string(k / 2) + (k % 2 ? ".5" : ".0"));
    }
    for (int k = 6; k <= 11; ++k) r.push_back(std::to_string(k) + ".0");
    return r;
  }();
  return radii;
}

int GoldenEntry::fractional_digits() const { return fractional_count(digits); }

std::vector<GoldenEntry> load_golden_table(const std::filesystem::path& data_dir, TableId id) {
  const std::filesystem::path path = data_dir / ("table_" + table_name(id) + ".txt");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table " + path.string());

  std::vector<GoldenEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& why) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + why);
    };
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;

    std::istringstream fields(trimmed);
    GoldenEntry e;
    e.table = id;
    int n = -1, l = -1;
    if (!(fields >> e.rc >> n >> l)) fail("expected '<r_c> <n> <l> <digits...>'");
    std::vector<std::string> groups;
    std::string token;
    while (fields >> token) {
      bool has_alpha = std::any_of(token.begin(), token.end(),
                                   [](unsigned char c) { return std::isalpha(c); });
      if (has_alpha) {
        if (!e.annotation.empty()) fail("multiple annotations");
        e.annotation = token;
        continue;
      }
      if (!e.annotation.empty()) fail("digit group after annotation");
      groups.push_back(token);
    }
    if (groups.empty()) fail("no energy digits");
    auto dot = groups.front().find('.');
    if (dot == std::string::npos) fail("first group must contain the decimal point");
    int first_frac = static_cast<int>(groups.front().size() - dot - 1);
    if (groups.size() > 1 && first_frac != 10) fail("first group must carry 10 digits");
    for (std::size_t g = 1; g < groups.size(); ++g) {
      bool last = g + 1 == groups.size();
      if (groups[g].find_first_not_of("0123456789") != std::string::npos) {
        fail("group '" + groups[g] + "' is not numeric");
      }
      if (!last && groups[g].size() != 10) fail("interior groups must be exactly 10 digits");
      if (last && (groups[g].empty() || groups[g].size() > 10)) fail("bad final group length");
    }

    e.state = OscillatorState{table_dimension(id), l, n};
    e.state.validate();
    std::ostringstream printed, digits;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (g) printed << ' ';
      printed << groups[g];
      digits << groups[g];
    }
    e.printed = printed.str();
    e.digits = digits.str();
    entries.push_back(std::move(e));
  }
  return entries;
}

AgreementReport compare_energy(const std::string& expected_digits, const BigReal& value) {
  const int p = fractional_count(expected_digits);
  AgreementReport r;
  r.expected = expected_digits;
  r.computed = value.to_fixed(p);

  mpz_class expect(strip_dot(expected_digits), 10);
  mpz_class got(strip_dot(r.computed), 10);
  mpz_class diff = abs(expect - got);
  if (diff == 0) {
    r.verdict = Verdict::Exact;
    r.matched_digits = p;
  } else if (diff == 1) {
    r.verdict = Verdict::LastDigitOff;
    r.matched_digits = p - 1;
  } else {
    r.verdict = Verdict::Fail;
    // count agreeing leading fractional digits, integer parts first
    auto de = r.expected.find('.');
    auto dc = r.computed.find('.');
    r.matched_digits = 0;
    if (de == dc && r.expected.compare(0, de, r.computed, 0, dc) == 0) {
      for (std::size_t i = de + 1; i < r.expected.size() && i < r.computed.size(); ++i) {
        if (r.expected[i] != r.computed[i]) break;
        ++r.matched_digits;
      }
    }
  }
  return r;
}

int cross_validate(const ConfinementProblem& problem, const PrecisionConfig& precision) {
  precision.validate();
  EigenvalueResult hyper = eigenvalue_hypergeometric(problem, precision);
  EigenvalueResult series = eigenvalue_series(problem, precision);
  BigReal diff = abs(hyper.energy_value - series.energy_value);
  if (diff.is_zero()) return precision.target_digits;
  long agreeing = -diff.dec_exponent();
  return static_cast<int>(std::min<long>(agreeing, precision.target_digits));
}

AgreementReport check_interdimensional(const OscillatorState& state_a,
                                       const OscillatorState& state_b, const std::string& rc,
                                       const PrecisionConfig& precision) {
  precision.validate();
  state_a.validate();
  state_b.validate();
  if (kummer_b(state_a) != kummer_b(state_b) || state_a.radial != state_b.radial) {
    throw std::invalid_argument("states do not share l + D/2 and n");
  }

  ConfinementProblem prob_a = make_problem(state_a, rc, precision);
  ConfinementProblem prob_b = make_problem(state_b, rc, precision);

  // The boundary condition sees (D, l) only through l + D/2, so the
  // parameter tuples — and therefore the boundary functions — must be
  // identical, not merely close. Spot-check at five energies.
  const int w = precision.initial_working_digits(precision.target_digits,
                                                 prob_a.z().to_double());
  const BigReal base = to_bigreal(kummer_b(state_a), detail::kScanGridDigits);
  const char* offsets[5] = {"-0.25", "0.5", "1.5", "2.25", "4.0"};
  for (const char* off : offsets) {
    BigReal e = base + BigReal::from_string(off, detail::kScanGridDigits);
    KummerParams qa = kummer_params(state_a, e);
    KummerParams qb = kummer_params(state_b, e);
    if (qa.a != qb.a || qa.b != qb.b) {
      throw DegeneracyViolation("quantization parameters differ at E=" + e.to_fixed(2));
    }
    KummerEval ea = kummer_1f1(qa.a, qa.b, prob_a.z(), w);
    KummerEval eb = kummer_1f1(qb.a, qb.b, prob_b.z(), w);
    if (ea.value != eb.value) {
      throw DegeneracyViolation("boundary values differ at E=" + e.to_fixed(2));
    }
  }

  EigenvalueResult res_a = eigenvalue_hypergeometric(prob_a, precision);
  EigenvalueResult res_b = eigenvalue_hypergeometric(prob_b, precision);
  AgreementReport report = compare_energy(res_a.energy, res_b.energy_value);
  if (report.matched_digits < precision.target_digits - 1) {
    throw DegeneracyViolation("degenerate states agree to only " +
                              std::to_string(report.matched_digits) + " digits at r_c=" + rc);
  }
  return report;
}

AgreementReport check_free_limit(const GoldenEntry& entry, const PrecisionConfig& precision) {
  precision.validate();
  if (BigReal::from_string(entry.rc, 20) < BigReal(9L, 20)) {
    throw std::invalid_argument("free-limit check needs r_c >= 9");
  }
  ConfinementProblem problem = make_problem(entry.state, entry.rc, precision);
  EigenvalueResult res = eigenvalue_hypergeometric(problem, precision);

  const int p = entry.fractional_digits();
  AgreementReport full = compare_energy(entry.digits, res.energy_value);

  // Render both sides as shifts off the free eigenvalue for the report.
  Rational free_q = free_energy(entry.state);
  mpz_class scale_pow;
  mpz_ui_pow_ui(scale_pow.get_mpz_t(), 10, static_cast<unsigned long>(p));
  mpz_class free_scaled = free_q.get_num() * scale_pow / free_q.get_den();
  mpz_class expect(strip_dot(entry.digits), 10);
  mpz_class got(strip_dot(res.energy_value.to_fixed(p)), 10);

  AgreementReport report;
  report.matched_digits = full.matched_digits;
  report.verdict = full.verdict;
  report.expected = render_tail(expect - free_scaled, p);
  report.computed = render_tail(got - free_scaled, p);
  return report;
}

std::vector<AgreementReport> golden_compare(TableId id, Method method,
                                            const PrecisionConfig& precision,
                                            const std::filesystem::path& data_dir,
                                            unsigned jobs) {
  precision.validate();
  std::vector<GoldenEntry> entries = load_golden_table(data_dir, id);

  // Annotation rows share their cell with a primary row: solve each unique
  // cell once.
  std::vector<const GoldenEntry*> cells;
  std::unordered_map<std::string, std::size_t> cell_index;
  std::vector<std::size_t> entry_cell(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const GoldenEntry& e = entries[i];
    std::string key = e.rc + "|" + std::to_string(e.state.radial) + "|" +
                      std::to_string(e.state.angular);
    auto [it, fresh] = cell_index.try_emplace(key, cells.size());
    if (fresh) cells.push_back(&e);
    entry_cell[i] = it->second;
  }

  std::vector<EigenvalueResult> solved = detail::parallel_map<EigenvalueResult>(
      cells.size(), jobs, [&](std::size_t i) {
        ConfinementProblem problem = make_problem(cells[i]->state, cells[i]->rc, precision);
        return solve(problem, method, precision);
      });

  std::vector<AgreementReport> reports;
  reports.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    reports.push_back(compare_energy(entries[i].digits, solved[entry_cell[i]].energy_value));
  }
  return reports;
}

}  // namespace cho
