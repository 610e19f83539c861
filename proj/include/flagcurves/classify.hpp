#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flagcurves/criterion.hpp"
#include "flagcurves/groebner.hpp"
#include "flagcurves/matrices.hpp"

namespace flagcurves {

inline constexpr long long kDefaultBudget = 100000;

// A curve admits a projective reparameterisation exactly when the criterion
// system has a solution; the witness carries the solving (Y, r) pair.
struct Projective {
  RatMatrix y;  // nilradical element (below-block support)
  RatMatrix r;  // unipotent element (identity plus above-block support)
  std::map<std::string, Rational> assignment;
};
struct AffineOnly {
  GroebnerBasis certificate;  // reduced basis {1}
};
struct Undetermined {
  std::string reason;
};
using ClassificationResult = std::variant<Projective, AffineOnly, Undetermined>;

const char* classification_name(const ClassificationResult& r);

// Decide the dichotomy for the curve generated by x. A Projective result is
// verified against the criterion equations; AffineOnly always carries the {1}
// certificate; search failure alone yields Undetermined, never AffineOnly.
ClassificationResult classify_curve(const FlagContext& ctx, const RatMatrix& x,
                                    long long budget = kDefaultBudget);

// Normal form of a nonzero nilradical element for the 3-by-3 Borel case under
// the adjoint action of the diagonal subgroup. Rows 3 and 7 form a family
// with invariant parameter x (row 3 is x = 0).
struct NormalFormRow {
  int row_id = 0;                      // 1..7
  std::optional<Rational> parameter;   // rows 3 and 7 only
  RatMatrix transform;                 // diagonal d with Ad_d(input) == normal_form
  RatMatrix normal_form;
};

NormalFormRow sl3_normal_form(const RatMatrix& x);

// The normal-form matrix of a table row (row 7 takes its parameter).
RatMatrix table_row_matrix(int row_id, const Rational& parameter = Rational(0));

// Conjugacy of nilradical elements under the parabolic subgroup, searched over
// the parameterization p = l * exp(z) with l block-diagonal (invertibility
// cleared by an auxiliary unknown) and z supported above the blocks.
struct Conjugate {
  RatMatrix p;  // verified: p x1 p^-1 == x2
};
struct NotConjugate {
  GroebnerBasis certificate;  // reduced basis {1}
};
struct ConjugacyUndetermined {
  std::string reason;
};
using ConjugacyOutcome = std::variant<Conjugate, NotConjugate, ConjugacyUndetermined>;

const char* conjugacy_name(const ConjugacyOutcome& o);

ConjugacyOutcome p_conjugacy_search(const FlagContext& ctx, const RatMatrix& x1,
                                    const RatMatrix& x2, long long budget = kDefaultBudget);

// Reproduction of the seven-row classification table (3-by-3 Borel case):
// rows 1..6 projective, row 7 affine-only for each sampled nonzero parameter,
// plus pairwise conjugacy of rows 4, 5, 6.
struct TableRowReport {
  int row_id = 0;
  std::optional<Rational> parameter;
  RatMatrix x;
  std::string expected;  // "projective" | "affine-only"
  std::string computed;
  ClassificationResult result = Undetermined{"not-run"};
  bool ok = false;
};
struct TableConjugacyReport {
  int first_row = 0;
  int second_row = 0;
  std::string outcome;  // conjugacy_name of the search result
  std::optional<RatMatrix> p;
  bool ok = false;
};
struct TableReport {
  std::vector<TableRowReport> rows;
  std::vector<TableConjugacyReport> conjugacies;
  bool all_ok = false;
};

// corrupt deliberately flips one expectation; used as a negative control to
// prove the reproduction actually compares something.
TableReport reproduce_table(long long budget = kDefaultBudget, bool corrupt = false);

}  // namespace flagcurves
