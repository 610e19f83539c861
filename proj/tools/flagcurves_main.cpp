#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagcurves/checks.hpp"
#include "flagcurves/classify.hpp"
#include "flagcurves/errors.hpp"
#include "flagcurves/json_io.hpp"
#include "flagcurves/lie1d.hpp"

namespace {

using flagcurves::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct Options {
  bool json_mode = false;
  int order = 24;
  long long budget = 100000;
  unsigned long long seed = 12345;
  int verbosity = 0;
  bool corrupt = false;
  std::string input = "-";
  std::string suite;
};

void add_common_flags(CLI::App* cmd, Options& opts) {
  cmd->add_flag("--json", opts.json_mode, "emit the JSON report instead of text");
  cmd->add_option("--order", opts.order, "series order for truncated checks")
      ->check(CLI::Range(8, 1 << 20))
      ->capture_default_str();
  cmd->add_option("--budget", opts.budget, "solver step budget")
      ->check(CLI::Range(1000LL, (long long)1e15))
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "seed for sampled checks")->capture_default_str();
  cmd->add_flag("-v", opts.verbosity, "increase verbosity (repeatable)");
  cmd->add_flag("--corrupt", opts.corrupt, "negative control: corrupt one expectation")
      ->group("");  // hidden
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw flagcurves::ParseError("cannot open input file: " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

// ---- text renderers (all read from the JSON report) ----

std::vector<std::string> matrix_lines(const json& entries) {
  std::vector<size_t> width;
  for (const auto& row : entries)
    for (size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.resize(j + 1, 0);
      width[j] = std::max(width[j], row[j].get<std::string>().size());
    }
  std::vector<std::string> lines;
  for (const auto& row : entries) {
    std::string line = "[ ";
    for (size_t j = 0; j < row.size(); ++j) {
      std::string cell = row[j].get<std::string>();
      line += std::string(width[j] - cell.size(), ' ') + cell;
      line += j + 1 < row.size() ? "  " : " ";
    }
    line += "]";
    lines.push_back(std::move(line));
  }
  return lines;
}

void print_matrix(std::ostream& os, const json& entries, const std::string& indent) {
  for (const auto& line : matrix_lines(entries)) os << indent << line << "\n";
}

void render_classification(std::ostream& os, const json& j, int verbosity) {
  os << "status: " << j["status"].get<std::string>() << "\n";
  if (j.contains("y")) {
    os << "Y =\n";
    print_matrix(os, j["y"], "  ");
    os << "r =\n";
    print_matrix(os, j["r"], "  ");
    if (verbosity > 0) {
      os << "assignment:\n";
      for (const auto& [name, value] : j["assignment"].items())
        os << "  " << name << " = " << value.get<std::string>() << "\n";
    }
  } else if (j.contains("certificate")) {
    os << "certificate basis:\n";
    for (const auto& g : j["certificate"]) os << "  " << g.get<std::string>() << "\n";
  } else if (j.contains("reason")) {
    os << "reason: " << j["reason"].get<std::string>() << "\n";
  }
}

void render_conjugacy(std::ostream& os, const json& j) {
  os << "status: " << j["status"].get<std::string>() << "\n";
  if (j.contains("p")) {
    os << "p =\n";
    print_matrix(os, j["p"], "  ");
  } else if (j.contains("certificate")) {
    os << "certificate basis:\n";
    for (const auto& g : j["certificate"]) os << "  " << g.get<std::string>() << "\n";
  } else if (j.contains("reason")) {
    os << "reason: " << j["reason"].get<std::string>() << "\n";
  }
}

void render_criterion(std::ostream& os, const json& j) {
  os << "unknowns:";
  for (const auto& u : j["unknowns"]) os << " " << u.get<std::string>();
  os << "\nequations (" << j["equations"].size() << "):\n";
  size_t k = 0;
  for (const auto& e : j["equations"])
    os << "  [" << ++k << "] " << e.get<std::string>() << " = 0\n";
}

void render_table(std::ostream& os, const json& j, int verbosity) {
  os << "row  parameter  expected     computed     ok\n";
  for (const auto& row : j["rows"]) {
    std::string param = row["parameter"].is_null() ? "-" : row["parameter"].get<std::string>();
    std::ostringstream line;
    line << row["rowId"].get<int>();
    std::string rowid = line.str();
    os << rowid << std::string(5 - rowid.size(), ' ') << param
       << std::string(param.size() < 11 ? 11 - param.size() : 1, ' ')
       << row["expected"].get<std::string>()
       << std::string(13 - row["expected"].get<std::string>().size(), ' ')
       << row["computed"].get<std::string>()
       << std::string(row["computed"].get<std::string>().size() < 13
                          ? 13 - row["computed"].get<std::string>().size()
                          : 1,
                      ' ')
       << (row["ok"].get<bool>() ? "yes" : "NO") << "\n";
    if (verbosity > 1) {
      os << "  normal form:\n";
      print_matrix(os, row["normalForm"], "    ");
    }
  }
  os << "conjugacies:\n";
  for (const auto& c : j["conjugacies"]) {
    os << "  rows " << c["first"].get<int>() << " and " << c["second"].get<int>() << ": "
       << c["outcome"].get<std::string>() << (c["ok"].get<bool>() ? "" : " (MISMATCH)") << "\n";
    if (verbosity > 0 && !c["p"].is_null()) print_matrix(os, c["p"], "    ");
  }
  os << "result: " << (j["allOk"].get<bool>() ? "all rows match" : "MISMATCH") << "\n";
}

void render_check_report(std::ostream& os, const json& j, int verbosity) {
  for (const auto& item : j["items"]) {
    os << (item["ok"].get<bool>() ? "PASS " : "FAIL ") << item["name"].get<std::string>();
    if (verbosity > 0 && !item["detail"].get<std::string>().empty())
      os << " — " << item["detail"].get<std::string>();
    os << "\n";
  }
  os << (j["allOk"].get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
}

void emit(const json& j, const Options& opts,
          void (*text_renderer)(std::ostream&, const json&, int)) {
  if (opts.json_mode)
    std::cout << j.dump(2) << "\n";
  else
    text_renderer(std::cout, j, opts.verbosity);
}

int cmd_classify(const Options& opts) {
  auto input = flagcurves::matrix_input_from_json(
      flagcurves::parse_json_text(read_input(opts.input)));
  auto result = flagcurves::classify_curve(input.ctx, input.x, opts.budget);
  json j = flagcurves::classification_to_json(result);
  emit(j, opts, [](std::ostream& os, const json& jj, int v) { render_classification(os, jj, v); });
  if (const auto* u = std::get_if<flagcurves::Undetermined>(&result))
    if (u->reason == "witness-verification-failed") return kExitMismatch;
  return kExitOk;
}

int cmd_criterion(const Options& opts) {
  auto input = flagcurves::matrix_input_from_json(
      flagcurves::parse_json_text(read_input(opts.input)));
  auto sys = flagcurves::build_criterion_system(input.ctx, input.x);
  json j = flagcurves::criterion_to_json(sys);
  emit(j, opts, [](std::ostream& os, const json& jj, int) { render_criterion(os, jj); });
  return kExitOk;
}

int cmd_conjugate(const Options& opts) {
  auto input = flagcurves::conjugacy_input_from_json(
      flagcurves::parse_json_text(read_input(opts.input)));
  auto outcome =
      flagcurves::p_conjugacy_search(input.ctx, input.first, input.second, opts.budget);
  json j = flagcurves::conjugacy_to_json(outcome);
  emit(j, opts, [](std::ostream& os, const json& jj, int) { render_conjugacy(os, jj); });
  if (const auto* u = std::get_if<flagcurves::ConjugacyUndetermined>(&outcome))
    if (u->reason == "witness-verification-failed") return kExitMismatch;
  return kExitOk;
}

int cmd_table(const Options& opts) {
  auto report = flagcurves::reproduce_table(opts.budget, opts.corrupt);
  json j = flagcurves::table_to_json(report);
  emit(j, opts, [](std::ostream& os, const json& jj, int v) { render_table(os, jj, v); });
  return report.all_ok ? kExitOk : kExitMismatch;
}

int cmd_lie1d(const Options& opts) {
  flagcurves::CheckReport report;
  if (opts.suite == "closure") {
    std::vector<Rational> lambdas = {Rational(1), Rational(2), Rational(1, 2)};
    // Two extra seeded nonzero rational rates.
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
    for (int k = 0; k < 2; ++k) {
      Rational l(num(rng), den(rng));
      lambdas.push_back(sign(rng) ? l : -l);
    }
    const size_t expected_dim[] = {1, 2, 2, 3, 3, 3};
    for (int idx = 1; idx <= 6; ++idx)
      for (const auto& l : lambdas) {
        auto c = flagcurves::check_closure(flagcurves::line_algebra_basis(idx, l));
        report.add("closure-" + std::to_string(idx) + " lambda=" + l.str(),
                   c.closed && c.dimension == expected_dim[idx - 1],
                   "dimension " + std::to_string(c.dimension));
        if (idx == 1 || idx == 3 || idx == 5) break;  // lambda-independent algebras
      }
  } else if (opts.suite == "ode") {
    report = flagcurves::verify_ode_solutions();
  } else if (opts.suite == "coordchange") {
    for (auto kind : {flagcurves::CoordChangeKind::Exp, flagcurves::CoordChangeKind::Tan,
                      flagcurves::CoordChangeKind::Tanh})
      for (const Rational& l : {Rational(1), Rational(2), Rational(1, 2)}) {
        auto sub = flagcurves::verify_coord_change({kind, l, opts.order});
        flagcurves::CheckReport renamed;
        for (auto& item : sub.items)
          renamed.add(std::string(flagcurves::coord_change_name(kind)) + " lambda=" + l.str() +
                          " " + item.name,
                      item.ok, item.detail);
        report.merge(renamed);
      }
  } else if (opts.suite == "flow") {
    report = flagcurves::flow_identities();
  } else {
    throw flagcurves::ParseError("unknown lie1d suite: " + opts.suite +
                                 " (expected closure|ode|coordchange|flow)");
  }
  json j = flagcurves::check_report_to_json(report);
  emit(j, opts, [](std::ostream& os, const json& jj, int v) { render_check_report(os, jj, v); });
  return report.all_ok ? kExitOk : kExitMismatch;
}

int cmd_paper_check(const Options& opts) {
  auto report = flagcurves::run_all_checks(opts.budget, opts.order, opts.corrupt);
  json j = flagcurves::check_report_to_json(report);
  emit(j, opts, [](std::ostream& os, const json& jj, int v) { render_check_report(os, jj, v); });
  if (!report.all_ok) {
    for (const auto& item : report.items)
      if (!item.ok) {
        std::cerr << "first failing item: " << item.name << "\n";
        break;
      }
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"exact classification of distinguished curves on flag manifolds"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "classify one nilradical generator");
  classify->add_option("input", opts.input, "matrix JSON path, or '-' for stdin");
  add_common_flags(classify, opts);

  auto* criterion = app.add_subcommand("criterion", "dump the polynomial criterion system");
  criterion->add_option("input", opts.input, "matrix JSON path, or '-' for stdin");
  add_common_flags(criterion, opts);

  auto* conjugate = app.add_subcommand("conjugate", "search for a parabolic conjugation");
  conjugate->add_option("input", opts.input, "two-matrix JSON path, or '-' for stdin");
  add_common_flags(conjugate, opts);

  auto* table = app.add_subcommand("table", "reproduce the seven-row classification table");
  add_common_flags(table, opts);

  auto* lie = app.add_subcommand("lie1d", "verification suites for line vector fields");
  lie->add_option("suite", opts.suite, "closure|ode|coordchange|flow")->required();
  add_common_flags(lie, opts);

  auto* paper = app.add_subcommand("paper-check", "run every built-in verification");
  add_common_flags(paper, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(opts);
    if (criterion->parsed()) return cmd_criterion(opts);
    if (conjugate->parsed()) return cmd_conjugate(opts);
    if (table->parsed()) return cmd_table(opts);
    if (lie->parsed()) return cmd_lie1d(opts);
    if (paper->parsed()) return cmd_paper_check(opts);
  } catch (const flagcurves::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
