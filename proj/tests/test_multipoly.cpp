#include <doctest.h>

#include "flagcurves/multipoly.hpp"

using namespace flagcurves;

namespace {
RingPtr xyz() { return PolyRing::make({"x", "y", "z"}); }
MultiPoly P(const RingPtr& r, const std::string& s) { return MultiPoly::parse(r, s); }
}  // namespace

TEST_CASE("monomial order comparisons") {
  Exponents a{1, 0, 2};  // x z^2
  Exponents b{0, 3, 0};  // y^3
  CHECK(compare_monomials(a, b, MonomialOrder::GrLex) == 1);
  CHECK(compare_monomials(a, b, MonomialOrder::GrevLex) == -1);
  CHECK(compare_monomials(a, b, MonomialOrder::Lex) == 1);

  Exponents x{1, 0, 0};
  Exponents y2{0, 2, 0};
  CHECK(compare_monomials(x, y2, MonomialOrder::Lex) == 1);     // lex ignores degree
  CHECK(compare_monomials(x, y2, MonomialOrder::GrLex) == -1);  // graded orders do not
  CHECK(compare_monomials(a, a, MonomialOrder::GrevLex) == 0);
}

TEST_CASE("monomial helpers") {
  Exponents a{2, 1, 0}, b{1, 3, 0};
  CHECK(exponent_degree(a) == 3);
  CHECK(monomial_lcm(a, b) == Exponents{2, 3, 0});
  CHECK(monomial_divides(Exponents{1, 1, 0}, a));
  CHECK(!monomial_divides(b, a));
  CHECK(monomial_quotient(a, Exponents{1, 1, 0}) == Exponents{1, 0, 0});
  CHECK_THROWS_AS(monomial_quotient(Exponents{1, 1, 0}, a), DomainError);
}

TEST_CASE("order names round trip") {
  for (auto o : {MonomialOrder::GrLex, MonomialOrder::GrevLex, MonomialOrder::Lex})
    CHECK(order_from_name(order_name(o)) == o);
  CHECK(!order_from_name("degrevlexx").has_value());
}

TEST_CASE("parse and str round trip") {
  auto r = xyz();
  const char* samples[] = {
      "0",
      "1",
      "-1/2",
      "x",
      "x^2*y - z + 3",
      "1/2*x*y - 2*y^2 + x - 5/3",
      "-x^3 + x^2*y - x*y^2 + y^3",
  };
  for (const char* s : samples) {
    MultiPoly p = P(r, s);
    CHECK(p.str() == s);
    CHECK(P(r, p.str()) == p);
  }
}

TEST_CASE("str orders terms by descending graded-lex") {
  auto r = xyz();
  CHECK(P(r, "z + x^2 + y").str() == "x^2 + y + z");
  CHECK(P(r, "y^3 + x*z^2").str() == "x*z^2 + y^3");
}

TEST_CASE("parse rejections") {
  auto r = xyz();
  CHECK_THROWS_AS(P(r, "w + 1"), ParseError);      // unknown variable
  CHECK_THROWS_AS(P(r, "x +"), ParseError);        // dangling operator
  CHECK_THROWS_AS(P(r, "x^"), ParseError);         // missing exponent
  CHECK_THROWS_AS(P(r, "2x"), ParseError);         // missing '*'
  CHECK_THROWS_AS(P(r, ""), ParseError);           // empty
  CHECK_THROWS_AS(P(r, "x**y"), ParseError);       // double star
}

TEST_CASE("arithmetic on fixed examples") {
  auto r = xyz();
  MultiPoly a = P(r, "x + y");
  MultiPoly b = P(r, "x - y");
  CHECK(a * b == P(r, "x^2 - y^2"));
  CHECK(a + b == P(r, "2*x"));
  CHECK(a - a == MultiPoly::zero(r));
  CHECK((a - a).is_zero());
  CHECK(a.pow(2) == P(r, "x^2 + 2*x*y + y^2"));
  CHECK(a.pow(0) == MultiPoly::constant(r, Rational(1)));
  CHECK(a.scaled(Rational(1, 2)) == P(r, "1/2*x + 1/2*y"));
  CHECK(-a == P(r, "-x - y"));
}

TEST_CASE("constant and degree queries") {
  auto r = xyz();
  CHECK(MultiPoly::zero(r).is_constant());
  CHECK(MultiPoly::zero(r).constant_value() == Rational(0));
  CHECK(P(r, "7/2").constant_value() == Rational(7, 2));
  CHECK(!P(r, "x").is_constant());
  MultiPoly p = P(r, "x^3*y + z^2");
  CHECK(p.total_degree() == 4);
  CHECK(p.degree_in(0) == 3);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.degree_in(2) == 2);
  CHECK(p.uses_var(2));
  CHECK(!P(r, "x").uses_var(1));
}

TEST_CASE("leading term per order") {
  auto r = xyz();
  MultiPoly p = P(r, "x*z^2 + y^3");
  CHECK(p.leading_term(MonomialOrder::GrLex)->exp == Exponents{1, 0, 2});
  CHECK(p.leading_term(MonomialOrder::GrevLex)->exp == Exponents{0, 3, 0});
  CHECK(MultiPoly::zero(r).leading_term(MonomialOrder::GrLex) == nullptr);
}

TEST_CASE("coefficients_in gives dense coefficient lists") {
  auto r = xyz();
  MultiPoly p = P(r, "x^2*y + 2*x - z");
  auto cs = p.coefficients_in(0);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == P(r, "-z"));
  CHECK(cs[1] == P(r, "2"));
  CHECK(cs[2] == P(r, "y"));
  auto free = P(r, "y + z").coefficients_in(0);
  REQUIRE(free.size() == 1);
  CHECK(free[0] == P(r, "y + z"));
}

TEST_CASE("derivative") {
  auto r = xyz();
  MultiPoly p = P(r, "x^3 + x*y^2 - 4*z");
  CHECK(p.derivative(0) == P(r, "3*x^2 + y^2"));
  CHECK(p.derivative(1) == P(r, "2*x*y"));
  CHECK(p.derivative(2) == P(r, "-4"));
  CHECK(P(r, "5").derivative(0).is_zero());
}

TEST_CASE("substitute polynomials and values") {
  auto r = xyz();
  MultiPoly p = P(r, "x^2 + y");
  MultiPoly q = p.substitute({{"x", P(r, "y + 1")}});
  CHECK(q == P(r, "y^2 + 3*y + 1"));
  CHECK(p.substitute_values({{"x", Rational(2)}}) == P(r, "y + 4"));
  CHECK(p.eval({{"x", Rational(2)}, {"y", Rational(1, 2)}}) == Rational(9, 2));
  // every used variable must be assigned for eval
  CHECK_THROWS_AS(p.eval({{"x", Rational(1)}}), DomainError);
  // unused variables need no assignment
  CHECK(P(r, "x").eval({{"x", Rational(3)}}) == Rational(3));
}

TEST_CASE("substitution into a different ring merges rings") {
  auto r = xyz();
  auto st = PolyRing::make({"s", "t"});
  MultiPoly p = P(r, "x*y");
  MultiPoly q = p.substitute({{"x", MultiPoly::variable(st, "s")}});
  CHECK(q.ring()->index_of("s").has_value());
  CHECK(q.ring()->index_of("y").has_value());
  CHECK(q == MultiPoly::parse(q.ring(), "y*s"));
}

TEST_CASE("mapped_to re-expresses over a compatible ring") {
  auto r = xyz();
  auto xy = PolyRing::make({"y", "x"});
  MultiPoly p = P(r, "x + 2*y");
  MultiPoly q = p.mapped_to(xy);
  CHECK(q == MultiPoly::parse(xy, "2*y + x"));
  CHECK_THROWS_AS(P(r, "z").mapped_to(xy), DomainError);
}

TEST_CASE("proportional detects rational multiples") {
  auto r = xyz();
  Rational f;
  CHECK(proportional(P(r, "2*x + 2*y"), P(r, "x + y"), &f));
  CHECK(f == Rational(2));
  CHECK(proportional(P(r, "-1/3*x"), P(r, "x"), &f));
  CHECK(f == Rational(-1, 3));
  CHECK(!proportional(P(r, "x + y"), P(r, "x - y")));
  CHECK(!proportional(P(r, "x"), P(r, "x + 1")));
  CHECK(proportional(MultiPoly::zero(r), MultiPoly::zero(r)));
  CHECK(!proportional(P(r, "x"), MultiPoly::zero(r)));
}

TEST_CASE("merged_ring keeps left order then appends") {
  auto a = PolyRing::make({"u", "t"});
  auto b = PolyRing::make({"t", "v"});
  auto m = merged_ring(a, b);
  CHECK(m->vars() == std::vector<std::string>{"u", "t", "v"});
}

TEST_CASE("ring variable lookup") {
  auto r = xyz();
  CHECK(r->index_of("y").value() == 1);
  CHECK(!r->index_of("q").has_value());
  CHECK(r->arity() == 3);
  CHECK(MultiPoly::variable(r, "z") == MultiPoly::variable(r, 2));
}
