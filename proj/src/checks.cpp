#include "flagcurves/checks.hpp"

#include "flagcurves/classify.hpp"
#include "flagcurves/criterion.hpp"
#include "flagcurves/errors.hpp"
#include "flagcurves/lie1d.hpp"
#include "flagcurves/matrices.hpp"

namespace flagcurves {

namespace {

MultiPoly pp(const RingPtr& ring, const std::string& text) {
  return MultiPoly::parse(ring, text);
}

// exp(t(E21+E31+E32)) and the unipotent-times-flow product display.
void check_exponential_displays(CheckReport& report) {
  RingPtr ring = PolyRing::make({"t"});
  MultiPoly t = MultiPoly::variable(ring, "t");
  MultiPoly one = MultiPoly::constant(ring, Rational(1));

  RatMatrix x(3);
  x.at(1, 0) = Rational(1);
  x.at(2, 0) = Rational(1);
  x.at(2, 1) = Rational(1);
  PolyMatrix flow = exp_nilpotent(x, t);
  PolyMatrix expected(ring, 3);
  expected.at(0, 0) = one;
  expected.at(1, 0) = t;
  expected.at(1, 1) = one;
  expected.at(2, 0) = t + pp(ring, "1/2*t^2");
  expected.at(2, 1) = t;
  expected.at(2, 2) = one;
  report.add("exponential-full-lower", flow == expected,
             "exp(t(E21+E31+E32)) has the 1, t, t + t^2/2 pattern");

  RatMatrix e21(3);
  e21.at(1, 0) = Rational(1);
  PolyMatrix u(ring, 3);
  u.at(0, 0) = one;
  u.at(0, 1) = one;
  u.at(1, 1) = one;
  u.at(2, 2) = one;
  PolyMatrix prod = u * exp_nilpotent(e21, t);
  PolyMatrix expected2(ring, 3);
  expected2.at(0, 0) = one + t;
  expected2.at(0, 1) = one;
  expected2.at(1, 0) = t;
  expected2.at(1, 1) = one;
  expected2.at(2, 2) = one;
  report.add("unipotent-times-flow", prod == expected2,
             "(I + E12) exp(t E21) = [[1+t,1,0],[t,1,0],[0,0,1]]");

  // Nilpotency index bookkeeping for the full lower generator.
  report.add("nilpotency-index", nilpotency_index(x) == 3, "(E21+E31+E32)^3 = 0");
}

void check_rotation_not_nilpotent(CheckReport& report) {
  RatMatrix rot(3);
  rot.at(0, 1) = Rational(-1);
  rot.at(1, 0) = Rational(1);
  bool threw = false;
  try {
    nilpotency_index(rot);
  } catch (const NotNilpotentError&) {
    threw = true;
  }
  report.add("rotation-not-nilpotent", threw,
             "the rotation generator has no polynomial exponential");
}

void check_mobius_cleared(CheckReport& report) {
  // Three-by-three symbolic identity.
  {
    RingPtr ring = PolyRing::make({"u", "v", "w", "t"});
    PolyMatrix y(ring, 3);
    y.at(1, 0) = MultiPoly::variable(ring, "u");
    y.at(2, 0) = MultiPoly::variable(ring, "v");
    y.at(2, 1) = MultiPoly::variable(ring, "w");
    PolyMatrix m = exp_mobius_cleared(y, FlagContext::borel(3), 3);
    PolyMatrix expected(ring, 3);
    MultiPoly sq = pp(ring, "t^2 + 2*t + 1");
    expected.at(0, 0) = sq;
    expected.at(1, 1) = sq;
    expected.at(2, 2) = sq;
    expected.at(1, 0) = pp(ring, "-u*t^2 - u*t");
    expected.at(2, 0) = pp(ring, "1/2*u*w*t^2 - v*t^2 - v*t");
    expected.at(2, 1) = pp(ring, "-w*t^2 - w*t");
    report.add("mobius-cleared-3x3", m == expected,
               "(t+1)^2 exp(-(t/(t+1)) Y) matches the displayed matrix");
  }
  // Two-by-two symbolic identity.
  {
    RingPtr ring = PolyRing::make({"u", "t"});
    PolyMatrix y(ring, 2);
    y.at(1, 0) = MultiPoly::variable(ring, "u");
    PolyMatrix m = exp_mobius_cleared(y, FlagContext::borel(2), 1);
    PolyMatrix expected(ring, 2);
    expected.at(0, 0) = pp(ring, "t + 1");
    expected.at(1, 1) = pp(ring, "t + 1");
    expected.at(1, 0) = pp(ring, "-u*t");
    report.add("mobius-cleared-2x2", m == expected, "(t+1) I - t Y in the rank-one case");
  }
  // Basepoint: t = 0 gives the identity.
  {
    RingPtr ring = PolyRing::make({"u", "v", "w", "t"});
    PolyMatrix y(ring, 3);
    y.at(1, 0) = MultiPoly::variable(ring, "u");
    y.at(2, 0) = MultiPoly::variable(ring, "v");
    y.at(2, 1) = MultiPoly::variable(ring, "w");
    PolyMatrix m = exp_mobius_cleared(y, FlagContext::borel(3), 3);
    RatMatrix at0 = m.eval({{"u", Rational(2)},
                            {"v", Rational(-3)},
                            {"w", Rational(5, 7)},
                            {"t", Rational(0)}});
    report.add("mobius-basepoint", at0 == RatMatrix::identity(3), "t = 0 is the identity");
  }
}

void check_borel_criterion_system(CheckReport& report) {
  // Rank-one case: equations 1 - u and 1 - u a.
  {
    RatMatrix x(2);
    x.at(1, 0) = Rational(1);
    CriterionSystem sys = build_criterion_system(FlagContext::borel(2), x);
    bool ok = sys.equations.size() == 2;
    if (ok) {
      ok = sys.equations[0] == pp(sys.ring, "-u + 1") &&
           sys.equations[1] == pp(sys.ring, "-u*a + 1");
    }
    report.add("criterion-system-2x2", ok, "equations [1 - u, 1 - u a]");
  }
  // Borel 3x3 with X = E21: the seven equations in construction order.
  {
    RatMatrix x(3);
    x.at(1, 0) = Rational(1);
    CriterionSystem sys = build_criterion_system(FlagContext::borel(3), x);
    const char* expected[] = {"-u + 1",
                              "-u*a - u + 2",
                              "-u*a + 1",
                              "-v",
                              "1/2*u*w - v*a - v - w",
                              "1/2*u*w*a - v*a - w",
                              "-v*a - w"};
    bool ok = sys.equations.size() == 7;
    for (size_t i = 0; ok && i < 7; ++i) ok = sys.equations[i] == pp(sys.ring, expected[i]);
    report.add("criterion-system-3x3", ok, "seven deduplicated equations, exact order");
  }
}

void check_reference_classifications(CheckReport& report, long long budget) {
  const FlagContext ctx = FlagContext::borel(3);
  {
    RatMatrix x(3);
    x.at(1, 0) = Rational(1);
    auto result = classify_curve(ctx, x, budget);
    bool ok = std::holds_alternative<Projective>(result);
    if (ok) {
      const auto& p = std::get<Projective>(result);
      RatMatrix expected_y(3);
      expected_y.at(1, 0) = Rational(1);
      ok = p.y == expected_y && p.r.at(0, 1) == Rational(1);
    }
    report.add("classify-projective-example", ok, "E21 is projective with Y = E21, a = 1");
  }
  {
    RatMatrix x(3);
    x.at(1, 0) = Rational(1);
    x.at(2, 0) = Rational(1);
    x.at(2, 1) = Rational(1);
    auto result = classify_curve(ctx, x, budget);
    bool ok = std::holds_alternative<AffineOnly>(result);
    if (ok) {
      const auto& a = std::get<AffineOnly>(result);
      ok = a.certificate.generators.size() == 1 &&
           a.certificate.generators[0] ==
               MultiPoly::constant(a.certificate.generators[0].ring(), Rational(1));
    }
    report.add("classify-affine-example", ok,
               "E21+E31+E32 is affine-only with certificate {1}");
  }
}

void check_adjoint_coincidence(CheckReport& report, long long budget) {
  // (I + E23) E31 (I - E23) = E21 + E31, exactly.
  RatMatrix p = RatMatrix::identity(3);
  p.at(1, 2) = Rational(1);
  RatMatrix e31(3);
  e31.at(2, 0) = Rational(1);
  RatMatrix expected(3);
  expected.at(1, 0) = Rational(1);
  expected.at(2, 0) = Rational(1);
  report.add("adjoint-coincidence", adjoint(p, e31) == expected,
             "(I+E23) E31 (I+E23)^{-1} = E21 + E31");

  const FlagContext ctx = FlagContext::borel(3);
  bool found = true;
  for (auto [a, b] : {std::pair<int, int>{4, 5}, {4, 6}, {5, 6}}) {
    auto out = p_conjugacy_search(ctx, table_row_matrix(a), table_row_matrix(b), budget);
    found = found && std::holds_alternative<Conjugate>(out);
  }
  report.add("conjugacy-witnesses", found, "rows 4, 5, 6 are pairwise conjugate");
}

}  // namespace

CheckReport run_all_checks(long long budget, int series_order, bool corrupt) {
  CheckReport report;
  check_exponential_displays(report);
  check_rotation_not_nilpotent(report);
  check_mobius_cleared(report);
  check_borel_criterion_system(report);
  check_reference_classifications(report, budget);
  check_adjoint_coincidence(report, budget);

  report.add("normal-form-table", reproduce_table(budget, corrupt).all_ok,
             corrupt ? "negative control: one expectation flipped"
                     : "rows 1-6 projective, row 7 affine-only, rows 4-6 conjugate");

  {
    bool closures = true;
    size_t expected_dim[] = {1, 2, 2, 3, 3, 3};
    for (int idx = 1; idx <= 6; ++idx)
      for (const Rational& l : {Rational(1), Rational(2), Rational(1, 2)}) {
        ClosureReport c = check_closure(line_algebra_basis(idx, l));
        closures = closures && c.closed && c.dimension == expected_dim[idx - 1];
      }
    report.add("vector-field-closures", closures,
               "six model algebras closed with dimensions 1,2,2,3,3,3");
  }

  {
    CheckReport ode = verify_ode_solutions();
    report.add("ode-solutions", ode.all_ok, "model equations hold exactly, series start x^2");
  }
  {
    bool changes = true;
    for (CoordChangeKind kind :
         {CoordChangeKind::Exp, CoordChangeKind::Tan, CoordChangeKind::Tanh})
      for (const Rational& l : {Rational(1), Rational(2), Rational(1, 2)})
        changes = changes && verify_coord_change({kind, l, series_order}).all_ok;
    report.add("coordinate-changes", changes,
               "all three changes verified at order " + std::to_string(series_order));
  }
  report.add("flow-identities", flow_identities().all_ok,
             "affine and projective flows, adjoint nilpotency");
  return report;
}

}  // namespace flagcurves
