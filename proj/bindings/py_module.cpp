#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "flagcurves/checks.hpp"
#include "flagcurves/classify.hpp"
#include "flagcurves/errors.hpp"
#include "flagcurves/json_io.hpp"
#include "flagcurves/lie1d.hpp"

namespace py = pybind11;

namespace {

using flagcurves::Rational;

std::string classify_json(const std::string& matrix_json, long long budget) {
  auto input = flagcurves::matrix_input_from_json(flagcurves::parse_json_text(matrix_json));
  return flagcurves::classification_to_json(
             flagcurves::classify_curve(input.ctx, input.x, budget))
      .dump();
}

std::string criterion_json(const std::string& matrix_json) {
  auto input = flagcurves::matrix_input_from_json(flagcurves::parse_json_text(matrix_json));
  return flagcurves::criterion_to_json(flagcurves::build_criterion_system(input.ctx, input.x))
      .dump();
}

std::string conjugate_json(const std::string& input_json, long long budget) {
  auto input = flagcurves::conjugacy_input_from_json(flagcurves::parse_json_text(input_json));
  return flagcurves::conjugacy_to_json(
             flagcurves::p_conjugacy_search(input.ctx, input.first, input.second, budget))
      .dump();
}

std::string table_json(long long budget, bool corrupt) {
  return flagcurves::table_to_json(flagcurves::reproduce_table(budget, corrupt)).dump();
}

std::string checks_json(long long budget, int order, bool corrupt) {
  return flagcurves::check_report_to_json(flagcurves::run_all_checks(budget, order, corrupt))
      .dump();
}

std::string normal_form_json(const std::string& matrix_json) {
  auto input = flagcurves::matrix_input_from_json(flagcurves::parse_json_text(matrix_json));
  auto nf = flagcurves::sl3_normal_form(input.x);
  nlohmann::json j;
  j["rowId"] = nf.row_id;
  j["parameter"] = nf.parameter ? nlohmann::json(nf.parameter->str()) : nlohmann::json(nullptr);
  j["transform"] = flagcurves::matrix_entries_json(nf.transform);
  j["normalForm"] = flagcurves::matrix_entries_json(nf.normal_form);
  return j.dump();
}

std::string bracket_str(const std::string& f, const std::string& g) {
  return flagcurves::bracket(flagcurves::VectorField1D::parse(f),
                             flagcurves::VectorField1D::parse(g))
      .str();
}

std::optional<std::vector<std::string>> span_membership_str(
    const std::string& f, const std::vector<std::string>& basis) {
  std::vector<flagcurves::VectorField1D> fields;
  fields.reserve(basis.size());
  for (const auto& b : basis) fields.push_back(flagcurves::VectorField1D::parse(b));
  auto coords = flagcurves::span_membership(flagcurves::VectorField1D::parse(f), fields);
  if (!coords) return std::nullopt;
  std::vector<std::string> out;
  out.reserve(coords->size());
  for (const auto& c : *coords) out.push_back(c.str());
  return out;
}

std::string closure_json(const std::vector<std::string>& basis) {
  std::vector<flagcurves::VectorField1D> fields;
  fields.reserve(basis.size());
  for (const auto& b : basis) fields.push_back(flagcurves::VectorField1D::parse(b));
  return flagcurves::closure_report_to_json(flagcurves::check_closure(fields)).dump();
}

std::string ode_json() {
  return flagcurves::check_report_to_json(flagcurves::verify_ode_solutions()).dump();
}

std::string coord_change_json(const std::string& kind, const std::string& lambda, int order) {
  flagcurves::CoordChangeKind k;
  if (kind == "exp")
    k = flagcurves::CoordChangeKind::Exp;
  else if (kind == "tan")
    k = flagcurves::CoordChangeKind::Tan;
  else if (kind == "tanh")
    k = flagcurves::CoordChangeKind::Tanh;
  else
    throw flagcurves::ParseError("coordinate change kind must be exp, tan, or tanh");
  return flagcurves::check_report_to_json(
             flagcurves::verify_coord_change({k, Rational::parse(lambda), order}))
      .dump();
}

std::string flow_json() {
  return flagcurves::check_report_to_json(flagcurves::flow_identities()).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact engine for distinguished-curve classification on flag manifolds";

  py::register_exception<flagcurves::ParseError>(m, "InputError", PyExc_ValueError);
  py::register_exception<flagcurves::DomainError>(m, "DomainInputError", PyExc_ValueError);

  m.def("classify_json", &classify_json, py::arg("matrix_json"),
        py::arg("budget") = flagcurves::kDefaultBudget,
        "Classify a nilradical generator; input and output are JSON strings.");
  m.def("criterion_json", &criterion_json, py::arg("matrix_json"),
        "Build the polynomial criterion system as a JSON string.");
  m.def("conjugate_json", &conjugate_json, py::arg("input_json"),
        py::arg("budget") = flagcurves::kDefaultBudget,
        "Search for a parabolic conjugation between two generators.");
  m.def("table_json", &table_json, py::arg("budget") = flagcurves::kDefaultBudget,
        py::arg("corrupt") = false, "Reproduce the seven-row classification table.");
  m.def("checks_json", &checks_json, py::arg("budget") = flagcurves::kDefaultBudget,
        py::arg("order") = 24, py::arg("corrupt") = false,
        "Run every built-in verification and return the report.");
  m.def("normal_form_json", &normal_form_json, py::arg("matrix_json"),
        "Normal form of a 3-by-3 strictly lower generator under the diagonal action.");

  m.def("bracket", &bracket_str, py::arg("f"), py::arg("g"),
        "Lie bracket of two line vector fields given in the string grammar.");
  m.def("span_membership", &span_membership_str, py::arg("f"), py::arg("basis"),
        "Rational coordinates of f in the span of basis, or None.");
  m.def("closure_json", &closure_json, py::arg("basis"),
        "Closure report for a set of line vector fields.");
  m.def("ode_json", &ode_json, "Verification report for the model ODE solutions.");
  m.def("coord_change_json", &coord_change_json, py::arg("kind"), py::arg("lambda_"),
        py::arg("order") = 24, "Verification report for one coordinate change.");
  m.def("flow_json", &flow_json, "Verification report for the flow identities.");
}
