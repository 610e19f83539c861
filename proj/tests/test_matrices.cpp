#include <doctest.h>

#include "flagcurves/matrices.hpp"

using namespace flagcurves;

namespace {
using Pos = std::vector<std::pair<int, int>>;

RatMatrix full_lower3() {
  RatMatrix m(3);
  m.at(1, 0) = Rational(1);
  m.at(2, 0) = Rational(1);
  m.at(2, 1) = Rational(1);
  return m;
}
}  // namespace

TEST_CASE("flag context block structure") {
  auto b3 = FlagContext::borel(3);
  CHECK(b3.is_borel());
  CHECK(b3.below_positions() == Pos{{1, 0}, {2, 0}, {2, 1}});
  CHECK(b3.above_positions() == Pos{{0, 1}, {0, 2}, {1, 2}});
  CHECK(b3.diag_positions() == Pos{{0, 0}, {1, 1}, {2, 2}});

  FlagContext mixed(3, {2, 1});
  CHECK(!mixed.is_borel());
  CHECK(mixed.below_positions() == Pos{{2, 0}, {2, 1}});
  CHECK(mixed.above_positions() == Pos{{0, 2}, {1, 2}});
  CHECK(mixed.diag_positions() == Pos{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}});

  CHECK_THROWS_AS(FlagContext(3, {2, 2}), DomainError);
  CHECK_THROWS_AS(FlagContext(2, {2, 0}), DomainError);
  CHECK_THROWS_AS(FlagContext(0, {}), DomainError);
}

TEST_CASE("rational matrix arithmetic") {
  auto e12 = RatMatrix::basis(2, 0, 1);
  auto e21 = RatMatrix::basis(2, 1, 0);
  RatMatrix comm = commutator(e12, e21);
  CHECK(comm.at(0, 0) == Rational(1));
  CHECK(comm.at(1, 1) == Rational(-1));
  CHECK(comm.trace() == Rational(0));

  auto id = RatMatrix::identity(2);
  CHECK(e12 * e21 + e21 * e12 == id);
  CHECK((e12 - e12).is_zero());
  CHECK(Rational(3) * id == id + id + id);
  CHECK(-e12 == RatMatrix(2) - e12);
}

TEST_CASE("determinant and inverse are exact") {
  RatMatrix m(3);
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(vals[i][j]);
  CHECK(m.det() == Rational(18));
  CHECK(m * m.inverse() == RatMatrix::identity(3));
  CHECK(m.inverse() * m == RatMatrix::identity(3));

  RatMatrix half(1);
  half.at(0, 0) = Rational(1, 2);
  CHECK(half.inverse().at(0, 0) == Rational(2));

  CHECK_THROWS_AS(RatMatrix(2).inverse(), DomainError);
  CHECK(RatMatrix(2).det() == Rational(0));
}

TEST_CASE("nilpotency index") {
  CHECK(nilpotency_index(RatMatrix(3)) == 1);
  CHECK(nilpotency_index(RatMatrix::basis(3, 1, 0)) == 2);
  CHECK(nilpotency_index(full_lower3()) == 3);
  RatMatrix rot(2);
  rot.at(0, 1) = Rational(-1);
  rot.at(1, 0) = Rational(1);
  CHECK_THROWS_AS(nilpotency_index(rot), NotNilpotentError);
}

TEST_CASE("nilpotent exponential of the full lower matrix") {
  auto ring = PolyRing::make({"t"});
  MultiPoly t = MultiPoly::variable(ring, "t");
  PolyMatrix e = exp_nilpotent(full_lower3(), t);
  PolyMatrix expected(ring, 3);
  expected.at(0, 0) = MultiPoly::constant(ring, Rational(1));
  expected.at(1, 0) = t;
  expected.at(1, 1) = MultiPoly::constant(ring, Rational(1));
  expected.at(2, 0) = t + Rational(1, 2) * t * t;
  expected.at(2, 1) = t;
  expected.at(2, 2) = MultiPoly::constant(ring, Rational(1));
  CHECK(e == expected);
  CHECK(e.det() == MultiPoly::constant(ring, Rational(1)));
}

TEST_CASE("polynomial matrix exponential matches the rational one") {
  auto ring = PolyRing::make({"t"});
  MultiPoly t = MultiPoly::variable(ring, "t");
  PolyMatrix n = PolyMatrix::from_rational(ring, full_lower3());
  CHECK(exp_nilpotent(n, t, 3) == exp_nilpotent(full_lower3(), t));
  CHECK_THROWS_AS(
      exp_nilpotent(PolyMatrix::identity(ring, 2), t, 2), NotNilpotentError);
}

TEST_CASE("cleared Moebius exponential, 3x3") {
  auto ctx = FlagContext::borel(3);
  auto ring = PolyRing::make({"u", "v", "w", "t"});
  PolyMatrix y(ring, 3);
  y.at(1, 0) = MultiPoly::variable(ring, "u");
  y.at(2, 0) = MultiPoly::variable(ring, "v");
  y.at(2, 1) = MultiPoly::variable(ring, "w");
  PolyMatrix m = exp_mobius_cleared(y, ctx, 3);

  auto p = [&](const char* s) { return MultiPoly::parse(ring, s); };
  CHECK(m.at(0, 0) == p("t^2 + 2*t + 1"));
  CHECK(m.at(1, 1) == p("t^2 + 2*t + 1"));
  CHECK(m.at(2, 2) == p("t^2 + 2*t + 1"));
  CHECK(m.at(1, 0) == p("-u*t^2 - u*t"));
  CHECK(m.at(2, 0) == p("1/2*u*w*t^2 - v*t^2 - v*t"));
  CHECK(m.at(2, 1) == p("-w*t^2 - w*t"));
  CHECK(m.at(0, 1).is_zero());
  CHECK(m.at(0, 2).is_zero());
  CHECK(m.at(1, 2).is_zero());

  // basepoint t = 0 is the identity
  PolyMatrix at0 = m.substitute_values({{"t", Rational(0)}});
  CHECK(at0 == PolyMatrix::identity(ring, 3));
}

TEST_CASE("cleared Moebius exponential, 2x2") {
  auto ctx = FlagContext::borel(2);
  auto ring = PolyRing::make({"u", "t"});
  PolyMatrix y(ring, 2);
  y.at(1, 0) = MultiPoly::variable(ring, "u");
  PolyMatrix m = exp_mobius_cleared(y, ctx, 1);
  auto p = [&](const char* s) { return MultiPoly::parse(ring, s); };
  CHECK(m.at(0, 0) == p("t + 1"));
  CHECK(m.at(1, 1) == p("t + 1"));
  CHECK(m.at(1, 0) == p("-u*t"));
  CHECK(m.at(0, 1).is_zero());
}

TEST_CASE("Moebius exponential rejects off-pattern input") {
  auto ctx = FlagContext::borel(2);
  auto ring = PolyRing::make({"u", "t"});
  PolyMatrix y(ring, 2);
  y.at(0, 1) = MultiPoly::variable(ring, "u");  // above the diagonal
  CHECK_THROWS_AS(exp_mobius_cleared(y, ctx, 1), NilradicalPatternError);
}

TEST_CASE("adjoint conjugation") {
  // (I + E23) E31 (I - E23) = E21 + E31
  auto p = RatMatrix::identity(3) + RatMatrix::basis(3, 1, 2);
  auto x = RatMatrix::basis(3, 2, 0);
  CHECK(adjoint(p, x) == RatMatrix::basis(3, 1, 0) + RatMatrix::basis(3, 2, 0));
  // Ad is a group action: Ad_id = id
  CHECK(adjoint(RatMatrix::identity(3), x) == x);
}

TEST_CASE("block membership predicates") {
  auto ctx = FlagContext::borel(3);
  CHECK(in_nilradical(full_lower3(), ctx));
  CHECK(!in_nilradical(RatMatrix::identity(3), ctx));
  CHECK(in_parabolic(RatMatrix::identity(3), ctx));
  CHECK(!in_parabolic(full_lower3(), ctx));

  FlagContext mixed(3, {2, 1});
  RatMatrix m = RatMatrix::basis(3, 1, 0);  // inside the first diagonal block
  CHECK(!in_nilradical(m, mixed));
  CHECK(in_parabolic(m, mixed));

  auto entries = below_block_entries(full_lower3(), ctx);
  CHECK(entries == std::vector<Rational>{1, 1, 1});
}

TEST_CASE("polynomial matrix basics") {
  auto ring = PolyRing::make({"a", "t"});
  auto a = MultiPoly::variable(ring, "a");
  PolyMatrix m = PolyMatrix::identity(ring, 2);
  m.at(0, 1) = a;
  CHECK(m.det() == MultiPoly::constant(ring, Rational(1)));
  PolyMatrix inv = m.inverse_constant_det();
  CHECK(m * inv == PolyMatrix::identity(ring, 2));
  CHECK(inv.at(0, 1) == -a);

  RatMatrix point = m.eval({{"a", Rational(5)}});
  CHECK(point.at(0, 1) == Rational(5));

  PolyMatrix tm = PolyMatrix::identity(ring, 2);
  tm.at(0, 0) = MultiPoly::variable(ring, "t");
  CHECK_THROWS_AS(tm.inverse_constant_det(), DomainError);

  CHECK(in_opposite_unipotent_radical(inv, FlagContext::borel(2)));
  CHECK(!in_opposite_unipotent_radical(tm, FlagContext::borel(2)));
}
