// Command-line front end: single eigenvalue queries, table regeneration,
// and verification against the bundled reference tables.
//
// Exit codes: 0 success, 1 verification failure, 2 bad flags, 3 solver error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cho/detail/parallel.hpp"
#include "cho/errors.hpp"
#include "cho/oscillator.hpp"
#include "cho/root_solver.hpp"
#include "cho/series_shooting.hpp"
#include "cho/table_gen.hpp"
#include "cho/validation.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

cho::PrecisionConfig make_config(int digits) {
  cho::PrecisionConfig cfg;
  cfg.target_digits = digits;
  if (const char* cap = std::getenv("CONFINED_HO_MAX_DIGITS")) {
    int v = std::atoi(cap);
    if (v <= 0) throw std::invalid_argument("CONFINED_HO_MAX_DIGITS must be a positive integer");
    cfg.max_working_digits = std::min(cfg.max_working_digits, v);
  }
  cfg.validate();
  return cfg;
}

std::filesystem::path resolve_data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CONFINED_HO_DATA")) return env;
  return CHO_DEFAULT_DATA_DIR;
}

cho::EigenvalueResult solve_with(const cho::ConfinementProblem& problem, cho::Method method,
                                 const cho::PrecisionConfig& cfg) {
  return method == cho::Method::Hypergeometric ? cho::eigenvalue_hypergeometric(problem, cfg)
                                               : cho::eigenvalue_series(problem, cfg);
}

void print_result(const cho::EigenvalueResult& r) {
  std::cout << cho::method_name(r.method) << ": " << cho::group_digits(r.energy) << '\n';
  std::cout << "  residual=" << (r.residual.is_zero() ? "0" : r.residual.to_sci(3))
            << " nodes=" << r.node_count << " working_digits=" << r.working_digits_used
            << " iterations=" << r.iterations << '\n';
}

int run_eigen(int dim, int l, int n, const std::string& rc, int digits,
              const std::string& method) {
  cho::PrecisionConfig cfg = make_config(digits);
  cho::OscillatorState state{dim, l, n};
  state.validate();
  cho::ConfinementProblem problem = cho::make_problem(state, rc, cfg);

  std::cout << "problem: D=" << dim << " l=" << l << " n=" << n << " rc=" << rc
            << " digits=" << digits << '\n';
  auto start = Clock::now();
  if (method == "hyper" || method == "both") {
    print_result(solve_with(problem, cho::Method::Hypergeometric, cfg));
  }
  if (method == "series" || method == "both") {
    print_result(solve_with(problem, cho::Method::SeriesShooting, cfg));
  }
  if (method == "both") {
    int agree = cho::cross_validate(problem, cfg);
    std::cout << "agreeing_digits=" << agree << '\n';
  }
  std::cerr << "elapsed " << seconds_since(start) << "s\n";
  return 0;
}

int run_table(const std::string& table, int digits, const std::string& format,
              const std::string& method, unsigned jobs) {
  cho::PrecisionConfig cfg = make_config(digits);
  cho::TableId id = cho::parse_table_id(table);
  cho::Method m = method == "series" ? cho::Method::SeriesShooting : cho::Method::Hypergeometric;

  auto start = Clock::now();
  std::vector<cho::OutputRecord> records = cho::generate_table(id, m, cfg, jobs);
  if (format == "paper") {
    std::cout << cho::render_paper(records);
  } else if (format == "csv") {
    std::cout << cho::render_csv(records);
  } else {
    std::cout << cho::to_json(records) << '\n';
  }
  std::cerr << "elapsed " << seconds_since(start) << "s\n";
  return 0;
}

struct VerifyCounts {
  int exact = 0;
  int last_digit = 0;
  int fail = 0;

  void add(cho::Verdict v) {
    if (v == cho::Verdict::Exact) ++exact;
    else if (v == cho::Verdict::LastDigitOff) ++last_digit;
    else ++fail;
  }
  int total() const { return exact + last_digit + fail; }
};

int run_verify(bool all, const std::string& table, const std::string& method, int digits,
               const std::string& data_flag, unsigned jobs) {
  cho::PrecisionConfig cfg = make_config(digits);
  std::filesystem::path data_dir = resolve_data_dir(data_flag);

  std::vector<cho::TableId> tables;
  if (all) {
    tables = {cho::TableId::I, cho::TableId::II, cho::TableId::III, cho::TableId::IV,
              cho::TableId::V};
  } else {
    tables = {cho::parse_table_id(table)};
  }
  std::vector<cho::Method> methods;
  if (method == "hyper") methods = {cho::Method::Hypergeometric};
  else if (method == "series") methods = {cho::Method::SeriesShooting};
  else methods = {cho::Method::Hypergeometric, cho::Method::SeriesShooting};

  auto start = Clock::now();
  VerifyCounts golden;
  int golden_cells = 0;
  for (cho::TableId id : tables) {
    for (cho::Method m : methods) {
      auto entries = cho::load_golden_table(data_dir, id);
      auto reports = cho::golden_compare(id, m, cfg, data_dir, jobs);
      VerifyCounts counts;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        counts.add(reports[i].verdict);
        if (reports[i].verdict == cho::Verdict::Fail) {
          std::cout << "  FAIL " << cho::table_name(id) << " rc=" << entries[i].rc
                    << " n=" << entries[i].state.radial << " l=" << entries[i].state.angular
                    << "\n    expected " << reports[i].expected << "\n    computed "
                    << reports[i].computed << '\n';
        }
      }
      std::cout << "golden " << cho::table_name(id) << "/" << cho::method_name(m) << ": "
                << counts.total() << " rows -> " << counts.exact << " exact, "
                << counts.last_digit << " last-digit, " << counts.fail << " fail\n";
      golden.exact += counts.exact;
      golden.last_digit += counts.last_digit;
      golden.fail += counts.fail;
      if (m == methods.front()) {
        for (const auto& e : entries) golden_cells += e.primary() ? 1 : 0;
      }
    }
  }

  VerifyCounts identity, tails;
  int cross_fail = 0;
  if (all) {
    // the three table-level degeneracies, every radius
    struct Pair {
      cho::OscillatorState a, b;
    };
    const std::vector<Pair> pairs = {
        {{1, 1, 0}, {3, 0, 0}}, {{2, 1, 0}, {4, 0, 0}}, {{3, 1, 0}, {5, 0, 0}}};
    const auto& radii = cho::table_radii();
    std::vector<std::pair<const Pair*, const std::string*>> work;
    for (const auto& p : pairs) {
      for (const auto& rc : radii) work.emplace_back(&p, &rc);
    }
    auto reports = cho::detail::parallel_map<cho::AgreementReport>(
        work.size(), jobs, [&](std::size_t i) {
          return cho::check_interdimensional(work[i].first->a, work[i].first->b,
                                             *work[i].second, cfg);
        });
    for (const auto& r : reports) identity.add(r.verdict);
    std::cout << "interdimensional: " << identity.total() << " pairs -> " << identity.exact
              << " exact, " << identity.last_digit << " last-digit, " << identity.fail
              << " fail\n";

    // free-limit tails at the three widest radii
    std::vector<const cho::GoldenEntry*> tail_rows;
    std::vector<std::vector<cho::GoldenEntry>> loaded;
    loaded.reserve(tables.size());
    for (cho::TableId id : tables) loaded.push_back(cho::load_golden_table(data_dir, id));
    for (const auto& entries : loaded) {
      for (const auto& e : entries) {
        if (!e.primary()) continue;
        if (e.rc == "9.0" || e.rc == "10.0" || e.rc == "11.0") tail_rows.push_back(&e);
      }
    }
    auto tail_reports = cho::detail::parallel_map<cho::AgreementReport>(
        tail_rows.size(), jobs,
        [&](std::size_t i) { return cho::check_free_limit(*tail_rows[i], cfg); });
    for (const auto& r : tail_reports) tails.add(r.verdict);
    std::cout << "free-limit tails: " << tails.total() << " rows -> " << tails.exact
              << " exact, " << tails.last_digit << " last-digit, " << tails.fail << " fail\n";

    // both backends against each other on a fixed subsample
    struct CrossCell {
      int dim;
      int l;
      const char* rc;
    };
    const std::vector<CrossCell> cross_cells = {{1, 0, "1.0"},   {1, 1, "4.0"}, {2, 0, "3.0"},
                                                {3, 1, "7.0"},   {4, 0, "2.5"}, {5, 1, "10.0"}};
    int min_agree = cfg.target_digits;
    auto agreements = cho::detail::parallel_map<int>(
        cross_cells.size(), jobs, [&](std::size_t i) {
          cho::OscillatorState st{cross_cells[i].dim, cross_cells[i].l, 0};
          return cho::cross_validate(cho::make_problem(st, cross_cells[i].rc, cfg), cfg);
        });
    for (int a : agreements) {
      min_agree = std::min(min_agree, a);
      if (a < cfg.target_digits - 1) ++cross_fail;
    }
    std::cout << "cross-validate: " << cross_cells.size() << " cells -> min agreement "
              << min_agree << " of target " << cfg.target_digits << " (" << cross_fail
              << " fail)\n";
  }

  int failures = golden.fail + identity.fail + tails.fail + cross_fail;
  std::cout << (failures ? "VERIFY FAIL: " : "VERIFY PASS: ") << golden_cells
            << " golden cells, " << failures << " failures\n";
  std::cerr << "elapsed " << seconds_since(start) << "s\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"50-digit eigenvalues of the isotropic harmonic oscillator confined to a hypersphere"};
  app.require_subcommand(1);

  int dim = 1, l = 0, n = 0, digits = 50;
  std::string rc, method = "both", table, format = "paper", data_dir;
  unsigned jobs = 0;
  bool all = false;

  CLI::App* eigen = app.add_subcommand("eigen", "compute one eigenvalue");
  eigen->add_option("--dim", dim, "dimension D >= 1")->required();
  eigen->add_option("--l", l, "angular number (parity for D=1)")->required();
  eigen->add_option("--n", n, "radial number (root index)")->required();
  eigen->add_option("--rc", rc, "confinement radius, decimal string")->required();
  eigen->add_option("--digits", digits, "reported fractional digits (default 50)");
  eigen->add_option("--method", method, "hyper | series | both")
      ->check(CLI::IsMember({"hyper", "series", "both"}));

  int t_digits = 50;
  std::string t_method = "hyper";
  CLI::App* table_cmd = app.add_subcommand("table", "regenerate a reference table");
  table_cmd->add_option("--table", table, "I | II | III | IV | V")->required();
  table_cmd->add_option("--digits", t_digits, "fractional digits (default 50)");
  table_cmd->add_option("--format", format, "paper | csv | json")
      ->check(CLI::IsMember({"paper", "csv", "json"}));
  table_cmd->add_option("--method", t_method, "hyper | series")
      ->check(CLI::IsMember({"hyper", "series"}));
  table_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  int v_digits = 50;
  std::string v_method = "both", v_table;
  CLI::App* verify = app.add_subcommand("verify", "check against the bundled tables");
  verify->add_flag("--all", all, "verify every table plus the cross suites");
  verify->add_option("--table", v_table, "verify a single table: I | II | III | IV | V");
  verify->add_option("--method", v_method, "hyper | series | both")
      ->check(CLI::IsMember({"hyper", "series", "both"}));
  verify->add_option("--digits", v_digits, "fractional digits (default 50)");
  verify->add_option("--data", data_dir, "directory with the golden table files");
  verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eigen->parsed()) return run_eigen(dim, l, n, rc, digits, method);
    if (table_cmd->parsed()) return run_table(table, t_digits, format, t_method, jobs);
    if (!all && v_table.empty()) {
      std::cerr << "verify: pass --all or --table X\n";
      return 2;
    }
    return run_verify(all, v_table, v_method, v_digits, data_dir, jobs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cho::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
