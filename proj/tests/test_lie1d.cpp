#include <doctest.h>

#include "flagcurves/lie1d.hpp"

using namespace flagcurves;

namespace {
QuasiPoly Q(const char* s) { return QuasiPoly::parse(s); }
VectorField1D V(const char* s) { return VectorField1D::parse(s); }
}  // namespace

TEST_CASE("quasi-polynomial parsing and emission") {
  CHECK(Q("x^2").str() == "x^2");
  CHECK(Q("2*x*exp(3*x)").str() == "2*x*exp(3*x)");
  CHECK(Q("x - 1/2*cos(2*x)").str() == "-1/2*cos(2*x) + x");  // ascending power order
  CHECK(QuasiPoly::parse(Q("x^3*exp(-x)*sin(5/2*x) - 7").str()) ==
        Q("x^3*exp(-x)*sin(5/2*x) - 7"));
  CHECK(Q("0").is_zero());
  CHECK((Q("x") - Q("x")).is_zero());
  CHECK_THROWS_AS(Q("x^"), ParseError);
  CHECK_THROWS_AS(Q("tan(x)"), ParseError);
  CHECK_THROWS_AS(Q(""), ParseError);
}

TEST_CASE("quasi-polynomial canonicalisation") {
  // sin is odd, cos is even: negative rates normalise
  CHECK(Q("sin(-2*x)") == -Q("sin(2*x)"));
  CHECK(Q("cos(-2*x)") == Q("cos(2*x)"));
  // zero trig rate collapses
  CHECK(QuasiPoly::monomial(Rational(3), 1, Rational(0), Rational(0), TrigKind::Cos) ==
        Q("3*x"));
  CHECK(QuasiPoly::monomial(Rational(3), 1, Rational(0), Rational(0), TrigKind::Sin)
            .is_zero());
}

TEST_CASE("hyperbolic functions expand into exponentials") {
  CHECK(Q("sinh(2*x)") == Q("1/2*exp(2*x) - 1/2*exp(-2*x)"));
  CHECK(Q("cosh(2*x)") == Q("1/2*exp(2*x) + 1/2*exp(-2*x)"));
  CHECK(Q("cosh(x)*cosh(x) - sinh(x)*sinh(x)") == Q("1"));
}

TEST_CASE("quasi-polynomial products use the product-to-sum identities") {
  CHECK(Q("cos(x)*cos(x) + sin(x)*sin(x)") == Q("1"));
  CHECK(Q("sin(x)*cos(x)") == Q("1/2*sin(2*x)"));
  CHECK(Q("sin(3*x)*sin(x)") == Q("1/2*cos(2*x) - 1/2*cos(4*x)"));
  CHECK(Q("cos(3*x)*cos(x)") == Q("1/2*cos(2*x) + 1/2*cos(4*x)"));
  CHECK(Q("sin(3*x)*cos(x)") == Q("1/2*sin(4*x) + 1/2*sin(2*x)"));
  CHECK(Q("cos(3*x)*sin(x)") == Q("1/2*sin(4*x) - 1/2*sin(2*x)"));
  CHECK(Q("exp(x)*exp(2*x)") == Q("exp(3*x)"));
  CHECK(Q("x^2*x^3") == Q("x^5"));
}

TEST_CASE("quasi-polynomial derivatives") {
  CHECK(Q("x^3").derivative() == Q("3*x^2"));
  CHECK(Q("exp(2*x)").derivative() == Q("2*exp(2*x)"));
  CHECK(Q("sin(3*x)").derivative() == Q("3*cos(3*x)"));
  CHECK(Q("cos(3*x)").derivative() == -Q("3*sin(3*x)"));
  CHECK(Q("x*exp(x)").derivative() == Q("exp(x) + x*exp(x)"));
  CHECK(Q("x*sin(x)").derivative() == Q("sin(x) + x*cos(x)"));
  CHECK(Q("7").derivative().is_zero());
}

TEST_CASE("quasi-polynomial series expansion") {
  CHECK(Q("exp(2*x)").to_series("x", 6) ==
        TruncatedSeries::elementary(ElemFn::Exp, Rational(2), "x", 6));
  CHECK(Q("sin(x)").to_series("x", 8) ==
        TruncatedSeries::elementary(ElemFn::Sin, Rational(1), "x", 8));
  CHECK(Q("x^2*cos(x)").to_series("x", 6).coeffs() ==
        std::vector<Rational>{0, 0, 1, 0, {-1, 2}, 0});
}

TEST_CASE("vector field text form") {
  CHECK(V("x^2").str() == "(x^2)*d/dx");
  CHECK(VectorField1D::parse(V("sin(2*x) - x").str()) == V("sin(2*x) - x"));
}

TEST_CASE("brackets of line vector fields") {
  CHECK(bracket(V("1"), V("x^2")) == V("2*x"));
  CHECK(bracket(V("x"), V("x")) == VectorField1D{});
  CHECK(bracket(V("sin(x)"), V("cos(x)")) == V("-1"));
  CHECK(bracket(V("1"), V("sin(2*x)")) == V("2*cos(2*x)"));
  // antisymmetry
  CHECK(bracket(V("x"), V("x^2")) == VectorField1D{-bracket(V("x^2"), V("x")).coeff});
}

TEST_CASE("span membership computes exact coordinates") {
  std::vector<VectorField1D> basis{V("1"), V("x"), V("x^2")};
  auto coords = span_membership(V("3*x^2 - 1/2*x + 5"), basis);
  REQUIRE(coords.has_value());
  CHECK(*coords == std::vector<Rational>{5, {-1, 2}, 3});
  CHECK(!span_membership(V("x^3"), basis).has_value());
  CHECK(!span_membership(V("exp(x)"), basis).has_value());
  CHECK(span_dimension(basis) == 3);
  // dependent bases are tolerated
  std::vector<VectorField1D> dep{V("x"), V("2*x")};
  CHECK(span_dimension(dep) == 1);
  CHECK(span_membership(V("3*x"), dep).has_value());
}

TEST_CASE("the six line algebras close under the bracket") {
  const size_t expected_dim[] = {1, 2, 2, 3, 3, 3};
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 2)}) {
    for (int idx = 1; idx <= 6; ++idx) {
      auto basis = line_algebra_basis(idx, lambda);
      auto report = check_closure(basis);
      CHECK(report.closed);
      CHECK(report.dimension == expected_dim[idx - 1]);
      CHECK(!report.counterexample.has_value());
    }
  }
}

TEST_CASE("a non-closed family yields a counterexample") {
  auto report = check_closure({V("1"), V("x^2")});
  CHECK(!report.closed);
  REQUIRE(report.counterexample.has_value());
  CHECK(report.counterexample->first == 1);
  CHECK(report.counterexample->second == 0);
  CHECK(report.counterexample->value == V("-2*x"));
}

TEST_CASE("line algebra constructor validation") {
  CHECK_THROWS_AS(line_algebra_basis(0, Rational(1)), DomainError);
  CHECK_THROWS_AS(line_algebra_basis(7, Rational(1)), DomainError);
  CHECK_THROWS_AS(line_algebra_basis(2, Rational(0)), DomainError);
  CHECK_THROWS_AS(check_closure({}), DomainError);
  // index 3 and 5 do not involve lambda
  CHECK(line_algebra_basis(3, Rational(0)).size() == 2);
}

TEST_CASE("model ODE solutions verify exactly") {
  auto report = verify_ode_solutions();
  CHECK(report.all_ok);
  CHECK(report.items.size() >= 10);
  for (const auto& item : report.items) CHECK(item.ok);
}

TEST_CASE("coordinate changes verify at several orders") {
  for (auto kind : {CoordChangeKind::Exp, CoordChangeKind::Tan, CoordChangeKind::Tanh}) {
    for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 2)}) {
      for (int order : {8, 16, 24}) {
        auto report = verify_coord_change({kind, lambda, order});
        CHECK(report.all_ok);
        CHECK(!report.items.empty());
      }
    }
  }
  CHECK_THROWS_AS(verify_coord_change({CoordChangeKind::Exp, Rational(0), 24}), DomainError);
  CHECK_THROWS_AS(verify_coord_change({CoordChangeKind::Tan, Rational(1), 4}), DomainError);
  CHECK(std::string(coord_change_name(CoordChangeKind::Exp)) == "exp-change");
  CHECK(std::string(coord_change_name(CoordChangeKind::Tan)) == "tan-change");
  CHECK(std::string(coord_change_name(CoordChangeKind::Tanh)) == "tanh-change");
}

TEST_CASE("flow identities verify exactly") {
  auto report = flow_identities();
  CHECK(report.all_ok);
  CHECK(report.items.size() >= 6);
}
