// Randomized properties of the criterion system and the classifier:
// soundness of the extracted equations against the symbolic curve product,
// invariance of the classification under the block-diagonal adjoint action
// and under rescaling, and transport of witnesses along that action.

#include <doctest.h>

#include <map>
#include <variant>
#include <vector>

#include "flagcurves/classify.hpp"
#include "flagcurves/criterion.hpp"
#include "flagcurves/matrices.hpp"
#include "support/gen.hpp"
#include "support/properties.hpp"

using namespace flagcurves;
using testgen::Rng;
using testprops::PropertyResult;

TEST_CASE("classification of table rows is invariant under diagonal action and scaling") {
  PropertyResult r = testprops::run_table_invariance(301, 220);
  CHECK(r.cases >= 220);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

namespace {

FlagContext random_context(Rng& rng) {
  switch (rng.int_in(0, 3)) {
    case 0: return FlagContext::borel(2);
    case 1: return FlagContext::borel(3);
    case 2: return FlagContext(3, {2, 1});
    default: return FlagContext(3, {1, 2});
  }
}

}  // namespace

TEST_CASE("equations vanish at an assignment exactly when the curve product does") {
  Rng rng(302);
  const std::vector<Rational> values{Rational(0), Rational(1), Rational(-1),
                                     Rational(2), Rational(1, 2)};
  int vanish_seen = 0;
  for (int i = 0; i < 200; ++i) {
    FlagContext ctx = random_context(rng);
    RatMatrix x = rng.nonzero_nilradical(ctx);
    CriterionSystem sys = build_criterion_system(ctx, x);
    PolyMatrix product = criterion_curve_product(ctx, x);

    std::map<std::string, Rational> assignment;
    if (rng.chance(0.3)) {
      // use an actual solution when one is available, so the vanishing side of
      // the equivalence is exercised too
      auto result = classify_curve(ctx, x, 30000);
      if (const auto* p = std::get_if<Projective>(&result)) assignment = p->assignment;
    }
    if (assignment.empty())
      for (const auto& name : sys.unknowns()) assignment[name] = rng.pick(values);

    bool equations_vanish = true;
    for (const Rational& r : substitute_witness(sys, assignment))
      equations_vanish = equations_vanish && r.is_zero();

    std::map<std::string, Rational> point = assignment;  // t stays symbolic
    bool product_vanishes_below = true;
    for (auto [r, c] : ctx.below_positions())
      product_vanishes_below =
          product_vanishes_below && product.at(r, c).substitute_values(point).is_zero();

    CHECK(equations_vanish == product_vanishes_below);
    if (equations_vanish) ++vanish_seen;
  }
  // both sides of the equivalence must actually be sampled
  CHECK(vanish_seen > 0);
  CHECK(vanish_seen < 200);
}

TEST_CASE("criterion systems are well formed") {
  Rng rng(303);
  for (int i = 0; i < 200; ++i) {
    FlagContext ctx = random_context(rng);
    RatMatrix x = rng.nonzero_nilradical(ctx);
    CriterionSystem sys = build_criterion_system(ctx, x);

    auto [ynames, rnames] = criterion_unknown_names(ctx);
    REQUIRE(sys.y_unknowns == ynames);
    REQUIRE(sys.r_unknowns == rnames);
    REQUIRE(sys.ring->arity() == ynames.size() + rnames.size());

    for (size_t a = 0; a < sys.equations.size(); ++a) {
      CHECK(!sys.equations[a].is_zero());
      for (size_t b = a + 1; b < sys.equations.size(); ++b)
        CHECK(sys.equations[a] != sys.equations[b]);
    }
    // bound: one equation per below entry per t-power of the curve product
    const size_t below = ctx.below_positions().size();
    const size_t tdeg = static_cast<size_t>(2 * (ctx.n - 1) + ctx.n);
    CHECK(sys.equations.size() <= below * (tdeg + 1));
  }
}

TEST_CASE("witnesses transport along the diagonal adjoint action") {
  Rng rng(304);
  FlagContext ctx = FlagContext::borel(3);
  const std::vector<Rational> units{Rational(1), Rational(-1), Rational(2),
                                    Rational(1, 2), Rational(-3)};

  // fixed witnesses for the projective rows
  std::vector<std::pair<RatMatrix, Projective>> seeds;
  for (int row = 1; row <= 6; ++row) {
    RatMatrix x = table_row_matrix(row);
    auto result = classify_curve(ctx, x);
    auto* p = std::get_if<Projective>(&result);
    REQUIRE(p != nullptr);
    seeds.emplace_back(x, *p);
  }

  for (int i = 0; i < 200; ++i) {
    const auto& [x, witness] = seeds[static_cast<size_t>(rng.int_in(0, 5))];
    RatMatrix l(3);
    for (int d = 0; d < 3; ++d) l.at(d, d) = rng.pick(units);

    RatMatrix xmoved = adjoint(l, x);
    RatMatrix ymoved = adjoint(l, witness.y);
    RatMatrix rmoved = l * witness.r * l.inverse();

    CriterionSystem sys = build_criterion_system(ctx, xmoved);
    std::map<std::string, Rational> assignment;
    const auto below = ctx.below_positions();
    for (size_t k = 0; k < below.size(); ++k)
      assignment[sys.y_unknowns[k]] = ymoved.at(below[k].first, below[k].second);
    const auto above = ctx.above_positions();
    for (size_t k = 0; k < above.size(); ++k)
      assignment[sys.r_unknowns[k]] = rmoved.at(above[k].first, above[k].second);

    for (const Rational& r : substitute_witness(sys, assignment)) CHECK(r.is_zero());
  }
}

TEST_CASE("normal-form parameter is a diagonal invariant") {
  Rng rng(305);
  for (int i = 0; i < 200; ++i) {
    Rational a = rng.nonzero_rational(3, 2);
    Rational b = rng.nonzero_rational(3, 2);
    Rational c = rng.nonzero_rational(3, 2);
    RatMatrix x(3);
    x.at(1, 0) = a;
    x.at(2, 0) = b;
    x.at(2, 1) = c;

    NormalFormRow nf = sl3_normal_form(x);
    REQUIRE(nf.row_id == 7);
    REQUIRE(nf.parameter.has_value());
    CHECK(*nf.parameter == b / (a * c));
    CHECK(adjoint(nf.transform, x) == nf.normal_form);

    RatMatrix l(3);
    const std::vector<Rational> units{Rational(1), Rational(-2), Rational(3),
                                      Rational(1, 2)};
    for (int d = 0; d < 3; ++d) l.at(d, d) = rng.pick(units);
    NormalFormRow nf2 = sl3_normal_form(adjoint(l, x));
    CHECK(nf2.row_id == nf.row_id);
    CHECK(*nf2.parameter == *nf.parameter);
  }
}
