// Randomized matrix-group properties: the one-parameter subgroup law, the
// adjoint action as a bracket homomorphism, and the cleared-denominator
// exponential against its pointwise factorization.

#include <doctest.h>

#include "flagcurves/matrices.hpp"
#include "support/gen.hpp"
#include "support/properties.hpp"

using namespace flagcurves;
using testgen::Rng;
using testprops::PropertyResult;

TEST_CASE("one-parameter subgroup law holds symbolically") {
  PropertyResult r = testprops::run_subgroup_law(201, 220);
  CHECK(r.cases >= 220);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("adjoint action is a bracket homomorphism") {
  PropertyResult r = testprops::run_adjoint_homomorphism(202, 220);
  CHECK(r.cases >= 220);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("exponential inverse law holds symbolically") {
  Rng rng(203);
  auto ring = PolyRing::make({"t"});
  MultiPoly t = MultiPoly::variable(ring, "t");
  for (int i = 0; i < 200; ++i) {
    const int n = rng.int_in(2, 4);
    RatMatrix x = rng.nonzero_strictly_lower(n);
    PolyMatrix prod = exp_nilpotent(x, t) * exp_nilpotent(x, -t);
    CHECK(prod == PolyMatrix::identity(ring, n));
  }
}

TEST_CASE("nilpotency index of strictly lower matrices is at most n") {
  Rng rng(204);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.int_in(2, 5);
    RatMatrix x = rng.nonzero_strictly_lower(n);
    int k = nilpotency_index(x);
    CHECK(k >= 2);
    CHECK(k <= n);
  }
}

TEST_CASE("cleared exponential factors pointwise away from t = -1") {
  Rng rng(205);
  const std::vector<Rational> points{Rational(1), Rational(2), Rational(-1, 2),
                                     Rational(3, 2)};
  auto ring = PolyRing::make({"t"});
  for (int i = 0; i < 150; ++i) {
    const int n = rng.int_in(2, 4);
    FlagContext ctx = FlagContext::borel(n);
    RatMatrix y = rng.nonzero_nilradical(ctx);

    PolyMatrix ypoly(ring, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        ypoly.at(r, c) = MultiPoly::constant(ring, y.at(r, c));
    PolyMatrix cleared = exp_mobius_cleared(ypoly, ctx, 0);

    for (const Rational& t0 : points) {
      // (t0+1)^(n-1) * exp(-(t0/(t0+1)) Y), the factorization being cleared of
      // its denominator
      Rational scale = (t0 + Rational(1)).pow(n - 1);
      Rational inner = -(t0 / (t0 + Rational(1)));
      RatMatrix expected =
          scale * exp_nilpotent(y, MultiPoly::constant(ring, inner)).eval({});
      RatMatrix lhs(n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          lhs.at(r, c) = cleared.at(r, c).eval({{"t", t0}});
      CHECK(lhs == expected);
    }
  }
}

TEST_CASE("cleared exponential at t = 0 is the identity") {
  Rng rng(206);
  auto ring = PolyRing::make({"t"});
  for (int i = 0; i < 100; ++i) {
    const int n = rng.int_in(2, 4);
    FlagContext ctx = FlagContext::borel(n);
    RatMatrix y = rng.nonzero_nilradical(ctx);
    PolyMatrix ypoly(ring, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        ypoly.at(r, c) = MultiPoly::constant(ring, y.at(r, c));
    PolyMatrix cleared = exp_mobius_cleared(ypoly, ctx, 0);
    RatMatrix at0(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) at0.at(r, c) = cleared.at(r, c).eval({{"t", Rational(0)}});
    CHECK(at0 == RatMatrix::identity(n));
  }
}
