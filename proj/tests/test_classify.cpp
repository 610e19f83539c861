#include <doctest.h>

#include "flagcurves/classify.hpp"

using namespace flagcurves;

namespace {

RatMatrix lower3(const Rational& a, const Rational& b, const Rational& c) {
  RatMatrix m(3);
  m.at(1, 0) = a;
  m.at(2, 0) = b;
  m.at(2, 1) = c;
  return m;
}

const Rational R0(0), R1(1);

}  // namespace

TEST_CASE("classify the 2x2 Borel generator") {
  auto out = classify_curve(FlagContext::borel(2), RatMatrix::basis(2, 1, 0));
  REQUIRE(std::holds_alternative<Projective>(out));
  const auto& p = std::get<Projective>(out);
  CHECK(p.assignment.at("u") == R1);
  CHECK(p.assignment.at("a") == R1);
  CHECK(p.y == RatMatrix::basis(2, 1, 0));
  CHECK(p.r == RatMatrix::identity(2) + RatMatrix::basis(2, 0, 1));
  CHECK(std::string(classification_name(out)) == "projective");
}

TEST_CASE("classify the 3x3 single-entry generator") {
  auto out = classify_curve(FlagContext::borel(3), RatMatrix::basis(3, 1, 0));
  REQUIRE(std::holds_alternative<Projective>(out));
  const auto& p = std::get<Projective>(out);
  CHECK(p.assignment.at("u") == R1);
  CHECK(p.assignment.at("a") == R1);
  for (const char* zero : {"v", "w", "b", "c"}) CHECK(p.assignment.at(zero) == R0);
}

TEST_CASE("classify the inconsistent 3x3 pattern as affine-only") {
  auto out = classify_curve(FlagContext::borel(3), lower3(R1, R1, R1));
  REQUIRE(std::holds_alternative<AffineOnly>(out));
  const auto& cert = std::get<AffineOnly>(out).certificate;
  REQUIRE(cert.generators.size() == 1);
  CHECK(cert.generators[0].is_constant());
  CHECK(cert.generators[0].constant_value() == R1);
  CHECK(std::string(classification_name(out)) == "affine-only");
}

TEST_CASE("classify the two-step generator via a factor branch") {
  // E21 + E31 needs the search to set the shared unknown a to zero first.
  auto out = classify_curve(FlagContext::borel(3), lower3(R1, R1, R0));
  REQUIRE(std::holds_alternative<Projective>(out));
  const auto& p = std::get<Projective>(out);
  CHECK(p.assignment.at("u") == R1);
  CHECK(p.assignment.at("v") == R1);
  CHECK(p.assignment.at("b") == R1);
  for (const char* zero : {"w", "a", "c"}) CHECK(p.assignment.at(zero) == R0);
}

TEST_CASE("classify the open-stratum generator as affine-only") {
  for (const Rational& param : {Rational(1), Rational(-1), Rational(2), Rational(1, 2)}) {
    auto out = classify_curve(FlagContext::borel(3), lower3(R1, param, R1));
    CHECK(std::holds_alternative<AffineOnly>(out));
  }
}

TEST_CASE("classify on a non-Borel block structure") {
  auto out = classify_curve(FlagContext(3, {2, 1}), RatMatrix::basis(3, 2, 0));
  REQUIRE(std::holds_alternative<Projective>(out));
  const auto& p = std::get<Projective>(out);
  CHECK(p.assignment.at("u") == R1);
  CHECK(p.assignment.at("a") == R1);
}

TEST_CASE("classification degrades to undetermined when starved") {
  auto out = classify_curve(FlagContext::borel(3), lower3(R1, R1, R0), 10);
  REQUIRE(std::holds_alternative<Undetermined>(out));
  CHECK(std::get<Undetermined>(out).reason == "budget-exhausted");
  CHECK(std::string(classification_name(out)) == "undetermined");
}

TEST_CASE("classification input errors propagate") {
  CHECK_THROWS_AS(classify_curve(FlagContext::borel(3), RatMatrix(3)), ZeroCurveError);
  CHECK_THROWS_AS(classify_curve(FlagContext::borel(3), RatMatrix::basis(3, 0, 2)),
                  NilradicalPatternError);
}

TEST_CASE("normal form of the worked 3x3 example") {
  auto nf = sl3_normal_form(lower3(Rational(2), Rational(3), Rational(4)));
  CHECK(nf.row_id == 7);
  REQUIRE(nf.parameter.has_value());
  CHECK(*nf.parameter == Rational(3, 8));
  RatMatrix d(3);
  d.at(0, 0) = Rational(1);
  d.at(1, 1) = Rational(1, 2);
  d.at(2, 2) = Rational(1, 8);
  CHECK(nf.transform == d);
  CHECK(adjoint(nf.transform, lower3(Rational(2), Rational(3), Rational(4))) == nf.normal_form);
  CHECK(nf.normal_form == lower3(R1, Rational(3, 8), R1));
}

TEST_CASE("normal form row identification") {
  CHECK(sl3_normal_form(lower3(Rational(5), R0, R0)).row_id == 1);
  CHECK(sl3_normal_form(lower3(R0, R0, Rational(-2))).row_id == 2);
  CHECK(sl3_normal_form(lower3(Rational(3), R0, Rational(7))).row_id == 3);
  CHECK(sl3_normal_form(lower3(Rational(2), Rational(5), R0)).row_id == 4);
  CHECK(sl3_normal_form(lower3(R0, Rational(4), Rational(9))).row_id == 5);
  CHECK(sl3_normal_form(lower3(R0, Rational(1, 3), R0)).row_id == 6);
  CHECK(sl3_normal_form(lower3(Rational(3), Rational(2), Rational(7))).row_id == 7);
}

TEST_CASE("normal forms are idempotent on the table rows") {
  for (int row = 1; row <= 6; ++row) {
    RatMatrix x = table_row_matrix(row);
    auto nf = sl3_normal_form(x);
    CHECK(nf.row_id == row);
    CHECK(nf.normal_form == x);
    CHECK(adjoint(nf.transform, x) == x);
  }
  for (const Rational& param : {Rational(2), Rational(-1, 3)}) {
    auto nf = sl3_normal_form(table_row_matrix(7, param));
    CHECK(nf.row_id == 7);
    CHECK(*nf.parameter == param);
    CHECK(nf.normal_form == table_row_matrix(7, param));
  }
}

TEST_CASE("normal form transform is rescaled to determinant one when possible") {
  // a=1, c=8: d = diag(1, 1, 1/8) has determinant 1/8; the cube root of 8 is
  // rational, so the transform is rescaled into the special linear group.
  auto nf = sl3_normal_form(lower3(R1, R0, Rational(8)));
  CHECK(nf.row_id == 3);
  CHECK(nf.transform.det() == R1);
  CHECK(adjoint(nf.transform, lower3(R1, R0, Rational(8))) == nf.normal_form);
}

TEST_CASE("normal form input validation") {
  CHECK_THROWS_AS(sl3_normal_form(RatMatrix(3)), ZeroCurveError);
  CHECK_THROWS_AS(sl3_normal_form(RatMatrix::identity(3)), NilradicalPatternError);
  CHECK_THROWS_AS(sl3_normal_form(RatMatrix::basis(2, 1, 0)), DomainError);
}

TEST_CASE("table row matrices") {
  CHECK(table_row_matrix(1) == lower3(R1, R0, R0));
  CHECK(table_row_matrix(2) == lower3(R0, R0, R1));
  CHECK(table_row_matrix(3) == lower3(R1, R0, R1));
  CHECK(table_row_matrix(4) == lower3(R1, R1, R0));
  CHECK(table_row_matrix(5) == lower3(R0, R1, R1));
  CHECK(table_row_matrix(6) == lower3(R0, R1, R0));
  CHECK(table_row_matrix(7, Rational(5)) == lower3(R1, Rational(5), R1));
  CHECK_THROWS_AS(table_row_matrix(8), DomainError);
  CHECK_THROWS_AS(table_row_matrix(0), DomainError);
}

TEST_CASE("parabolic conjugacy finds and verifies witnesses") {
  auto ctx = FlagContext::borel(3);
  for (auto [i, j] : {std::pair{4, 5}, std::pair{4, 6}, std::pair{5, 6}}) {
    auto x1 = table_row_matrix(i);
    auto x2 = table_row_matrix(j);
    auto out = p_conjugacy_search(ctx, x1, x2);
    REQUIRE(std::holds_alternative<Conjugate>(out));
    const auto& p = std::get<Conjugate>(out).p;
    CHECK(adjoint(p, x1) == x2);
    CHECK(in_parabolic(p, ctx));
    CHECK(std::string(conjugacy_name(out)) == "conjugate");
  }
}

TEST_CASE("parabolic conjugacy separates distinct orbits") {
  auto ctx = FlagContext::borel(3);
  auto out = p_conjugacy_search(ctx, table_row_matrix(1), table_row_matrix(2));
  REQUIRE(std::holds_alternative<NotConjugate>(out));
  const auto& cert = std::get<NotConjugate>(out).certificate;
  REQUIRE(cert.generators.size() == 1);
  CHECK(cert.generators[0].constant_value() == R1);
  CHECK(std::string(conjugacy_name(out)) == "not-conjugate");
}

TEST_CASE("parabolic conjugacy identity and degradation") {
  auto ctx = FlagContext::borel(3);
  auto same = p_conjugacy_search(ctx, table_row_matrix(1), table_row_matrix(1));
  REQUIRE(std::holds_alternative<Conjugate>(same));
  CHECK(adjoint(std::get<Conjugate>(same).p, table_row_matrix(1)) == table_row_matrix(1));

  auto starved = p_conjugacy_search(ctx, table_row_matrix(4), table_row_matrix(6), 10);
  REQUIRE(std::holds_alternative<ConjugacyUndetermined>(starved));
  CHECK(std::string(conjugacy_name(starved)) == "undetermined");
}

TEST_CASE("parabolic conjugacy input validation") {
  auto ctx = FlagContext::borel(3);
  CHECK_THROWS_AS(p_conjugacy_search(ctx, RatMatrix::identity(3), table_row_matrix(1)),
                  NilradicalPatternError);
  CHECK_THROWS_AS(p_conjugacy_search(ctx, RatMatrix::basis(2, 1, 0), RatMatrix::basis(2, 1, 0)),
                  DomainError);
}

TEST_CASE("table reproduction") {
  TableReport report = reproduce_table();
  CHECK(report.all_ok);
  REQUIRE(report.rows.size() == 10);
  for (const auto& row : report.rows) {
    CHECK(row.ok);
    CHECK(row.expected == row.computed);
    if (row.row_id <= 6) CHECK(row.computed == "projective");
    if (row.row_id == 7) CHECK(row.computed == "affine-only");
  }
  REQUIRE(report.conjugacies.size() == 3);
  for (const auto& c : report.conjugacies) {
    CHECK(c.ok);
    CHECK(c.outcome == "conjugate");
    REQUIRE(c.p.has_value());
    CHECK(adjoint(*c.p, table_row_matrix(c.first_row)) == table_row_matrix(c.second_row));
  }
}

TEST_CASE("corrupted table reproduction fails as a negative control") {
  TableReport report = reproduce_table(kDefaultBudget, true);
  CHECK(!report.all_ok);
}
