#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagcurves/matrices.hpp"

namespace flagcurves {

// Polynomial system whose solutions are exactly the pairs (Y, r) certifying
// that the curve generated by X extends across the Moebius point:
//   E(t) = M(t) * r * exp(tX)   must stay block-upper for all t,
// where M(t) is the cleared exponential of Y and r is block-unipotent. The
// equations are the t-coefficients of the below-block entries of E.
struct CriterionSystem {
  FlagContext ctx;
  RatMatrix generator;
  RingPtr ring;  // variables: Y-unknowns then r-unknowns, each row-major
  std::vector<std::string> y_unknowns;
  std::vector<std::string> r_unknowns;
  std::vector<MultiPoly> equations;  // deduplicated, zero polynomials dropped

  std::vector<std::string> unknowns() const;
};

// Unknown names for a block structure: Y-unknowns (below positions, row-major)
// named u, v, w then positionally; r-unknowns (above positions, row-major)
// named a, b, c then positionally.
std::pair<std::vector<std::string>, std::vector<std::string>> criterion_unknown_names(
    const FlagContext& ctx);

// Throws ZeroCurveError for X = 0 and NilradicalPatternError when X has
// support outside the below-block positions.
CriterionSystem build_criterion_system(const FlagContext& ctx, const RatMatrix& x);

// Residuals of every equation at a full assignment of the unknowns.
std::vector<Rational> substitute_witness(const CriterionSystem& sys,
                                         const std::map<std::string, Rational>& assignment);

// The symbolic curve product E(t) itself (over the unknowns-plus-t ring, t
// last); exposed for independent cross-checks.
PolyMatrix criterion_curve_product(const FlagContext& ctx, const RatMatrix& x);

}  // namespace flagcurves
