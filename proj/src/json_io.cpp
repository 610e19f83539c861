#include "flagcurves/json_io.hpp"

#include "flagcurves/errors.hpp"

namespace flagcurves {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v, const char* where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw ParseError(std::string(where) + ": expected a rational string or integer");
}

FlagContext context_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  std::vector<int> blocks;
  if (j.contains("blocks")) {
    if (!j["blocks"].is_array()) throw ParseError("\"blocks\" must be an array of integers");
    for (const auto& b : j["blocks"]) {
      if (!b.is_number_integer()) throw ParseError("\"blocks\" must be an array of integers");
      blocks.push_back(b.get<int>());
    }
  } else {
    blocks.assign(static_cast<size_t>(n), 1);  // default: full flag (Borel)
  }
  return FlagContext(n, blocks);
}

RatMatrix entries_from_json_sized(const json& entries, int n, const char* field) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != n)
    throw ParseError(std::string(field) + ": expected " + std::to_string(n) + " rows");
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = entries[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(std::string(field) + ": row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j)
      m.at(i, j) = rational_from_json(row[static_cast<size_t>(j)], field);
  }
  return m;
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

MatrixInput matrix_input_from_json(const nlohmann::json& j) {
  FlagContext ctx = context_from_json(j);
  if (!j.contains("entries")) throw ParseError("missing field \"entries\"");
  return MatrixInput{ctx, entries_from_json_sized(j["entries"], ctx.n, "entries")};
}

nlohmann::json matrix_input_to_json(const FlagContext& ctx, const RatMatrix& x) {
  json j;
  j["n"] = ctx.n;
  j["blocks"] = ctx.blocks;
  j["entries"] = matrix_entries_json(x);
  return j;
}

ConjugacyInput conjugacy_input_from_json(const nlohmann::json& j) {
  FlagContext ctx = context_from_json(j);
  if (!j.contains("first") || !j.contains("second"))
    throw ParseError("conjugacy input needs \"first\" and \"second\" matrices");
  return ConjugacyInput{ctx, entries_from_json_sized(j["first"], ctx.n, "first"),
                        entries_from_json_sized(j["second"], ctx.n, "second")};
}

nlohmann::json matrix_entries_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_entries_from_json(const nlohmann::json& entries) {
  if (!entries.is_array() || entries.empty())
    throw ParseError("entries: expected a nonempty array of rows");
  return entries_from_json_sized(entries, static_cast<int>(entries.size()), "entries");
}

nlohmann::json criterion_to_json(const CriterionSystem& sys) {
  json j;
  j["unknowns"] = sys.unknowns();
  json eqs = json::array();
  for (const auto& e : sys.equations) eqs.push_back(e.str());
  j["equations"] = std::move(eqs);
  return j;
}

nlohmann::json classification_to_json(const ClassificationResult& r) {
  json j;
  j["status"] = classification_name(r);
  if (const auto* p = std::get_if<Projective>(&r)) {
    j["y"] = matrix_entries_json(p->y);
    j["r"] = matrix_entries_json(p->r);
    json assignment = json::object();
    for (const auto& [name, value] : p->assignment) assignment[name] = value.str();
    j["assignment"] = std::move(assignment);
  } else if (const auto* a = std::get_if<AffineOnly>(&r)) {
    json basis = json::array();
    for (const auto& g : a->certificate.generators) basis.push_back(g.str());
    j["certificate"] = std::move(basis);
  } else {
    j["reason"] = std::get<Undetermined>(r).reason;
  }
  return j;
}

nlohmann::json conjugacy_to_json(const ConjugacyOutcome& o) {
  json j;
  j["status"] = conjugacy_name(o);
  if (const auto* c = std::get_if<Conjugate>(&o)) {
    j["p"] = matrix_entries_json(c->p);
  } else if (const auto* nc = std::get_if<NotConjugate>(&o)) {
    json basis = json::array();
    for (const auto& g : nc->certificate.generators) basis.push_back(g.str());
    j["certificate"] = std::move(basis);
  } else {
    j["reason"] = std::get<ConjugacyUndetermined>(o).reason;
  }
  return j;
}

nlohmann::json table_to_json(const TableReport& t) {
  json j;
  j["allOk"] = t.all_ok;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    r["rowId"] = row.row_id;
    r["parameter"] = row.parameter ? json(row.parameter->str()) : json(nullptr);
    r["normalForm"] = matrix_entries_json(row.x);
    r["expected"] = row.expected;
    r["computed"] = row.computed;
    r["ok"] = row.ok;
    r["witnessOrCertificate"] = classification_to_json(row.result);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  json cjs = json::array();
  for (const auto& c : t.conjugacies) {
    json cj;
    cj["first"] = c.first_row;
    cj["second"] = c.second_row;
    cj["outcome"] = c.outcome;
    cj["ok"] = c.ok;
    cj["p"] = c.p ? matrix_entries_json(*c.p) : json(nullptr);
    cjs.push_back(std::move(cj));
  }
  j["conjugacies"] = std::move(cjs);
  return j;
}

nlohmann::json check_report_to_json(const CheckReport& r) {
  json j;
  j["allOk"] = r.all_ok;
  json items = json::array();
  for (const auto& item : r.items) {
    json it;
    it["name"] = item.name;
    it["ok"] = item.ok;
    it["detail"] = item.detail;
    items.push_back(std::move(it));
  }
  j["items"] = std::move(items);
  return j;
}

nlohmann::json closure_report_to_json(const ClosureReport& r) {
  json j;
  j["closed"] = r.closed;
  j["dimension"] = r.dimension;
  if (r.counterexample) {
    json ce;
    ce["first"] = r.counterexample->first;
    ce["second"] = r.counterexample->second;
    ce["value"] = r.counterexample->value.str();
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace flagcurves
