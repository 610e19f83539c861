#pragma once

#include <string>

#include <json.hpp>

#include "flagcurves/classify.hpp"
#include "flagcurves/criterion.hpp"
#include "flagcurves/lie1d.hpp"
#include "flagcurves/matrices.hpp"
#include "flagcurves/report.hpp"

namespace flagcurves {

// Wraps nlohmann parsing so malformed input surfaces as ParseError.
nlohmann::json parse_json_text(const std::string& text);

// Matrix JSON object: {"n": int, "blocks": [int,...], "entries": [[rational
// strings]]}. Entries accept integers as a convenience; emission always uses
// the rational text format.
struct MatrixInput {
  FlagContext ctx;
  RatMatrix x;
};
MatrixInput matrix_input_from_json(const nlohmann::json& j);
nlohmann::json matrix_input_to_json(const FlagContext& ctx, const RatMatrix& x);

// Conjugacy input: {"n", "blocks", "first": entries, "second": entries}.
struct ConjugacyInput {
  FlagContext ctx;
  RatMatrix first;
  RatMatrix second;
};
ConjugacyInput conjugacy_input_from_json(const nlohmann::json& j);

nlohmann::json matrix_entries_json(const RatMatrix& m);
RatMatrix matrix_entries_from_json(const nlohmann::json& entries);

// {"unknowns": [...], "equations": [poly strings]}
nlohmann::json criterion_to_json(const CriterionSystem& sys);

nlohmann::json classification_to_json(const ClassificationResult& r);
nlohmann::json conjugacy_to_json(const ConjugacyOutcome& o);
nlohmann::json table_to_json(const TableReport& t);
nlohmann::json check_report_to_json(const CheckReport& r);
nlohmann::json closure_report_to_json(const ClosureReport& r);

}  // namespace flagcurves
