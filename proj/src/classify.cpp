#include "flagcurves/classify.hpp"

#include <algorithm>

#include "flagcurves/errors.hpp"

namespace flagcurves {

const char* classification_name(const ClassificationResult& r) {
  if (std::holds_alternative<Projective>(r)) return "projective";
  if (std::holds_alternative<AffineOnly>(r)) return "affine-only";
  return "undetermined";
}

ClassificationResult classify_curve(const FlagContext& ctx, const RatMatrix& x,
                                    long long budget) {
  CriterionSystem sys = build_criterion_system(ctx, x);
  SolveOutcome out = find_rational_witness(PolySystem{sys.ring, sys.equations}, budget);
  if (auto* w = std::get_if<Witness>(&out)) {
    for (const auto& res : substitute_witness(sys, w->assignment))
      if (!res.is_zero()) return Undetermined{"witness-verification-failed"};
    RatMatrix y(ctx.n);
    {
      size_t k = 0;
      for (auto [i, j] : sys.ctx.below_positions())
        y.at(i, j) = w->assignment.at(sys.y_unknowns[k++]);
    }
    RatMatrix r = RatMatrix::identity(ctx.n);
    {
      size_t k = 0;
      for (auto [i, j] : sys.ctx.above_positions())
        r.at(i, j) = w->assignment.at(sys.r_unknowns[k++]);
    }
    return Projective{std::move(y), std::move(r), std::move(w->assignment)};
  }
  if (auto* inc = std::get_if<Inconsistent>(&out))
    return AffineOnly{std::move(inc->certificate)};
  return Undetermined{std::move(std::get<Unknown>(out).reason)};
}

RatMatrix table_row_matrix(int row_id, const Rational& parameter) {
  RatMatrix m(3);
  switch (row_id) {
    case 1: m.at(1, 0) = Rational(1); break;
    case 2: m.at(2, 1) = Rational(1); break;
    case 3:
      m.at(1, 0) = Rational(1);
      m.at(2, 1) = Rational(1);
      break;
    case 4:
      m.at(1, 0) = Rational(1);
      m.at(2, 0) = Rational(1);
      break;
    case 5:
      m.at(2, 0) = Rational(1);
      m.at(2, 1) = Rational(1);
      break;
    case 6: m.at(2, 0) = Rational(1); break;
    case 7:
      m.at(1, 0) = Rational(1);
      m.at(2, 0) = parameter;
      m.at(2, 1) = Rational(1);
      break;
    default: throw DomainError("table rows are numbered 1..7");
  }
  return m;
}

NormalFormRow sl3_normal_form(const RatMatrix& x) {
  if (x.n() != 3) throw DomainError("normal forms cover the 3-by-3 case only");
  if (x.is_zero()) throw ZeroCurveError("zero generator gives a constant curve");
  if (!in_nilradical(x, FlagContext::borel(3)))
    throw NilradicalPatternError("generator must be strictly lower triangular");

  const Rational a = x.at(1, 0), b = x.at(2, 0), c = x.at(2, 1);
  NormalFormRow out;
  Rational alpha(1), beta(1);
  if (!a.is_zero() && !c.is_zero()) {
    const Rational inv = b / (a * c);
    out.row_id = inv.is_zero() ? 3 : 7;
    out.parameter = inv;
    alpha = a.inverse();
    beta = c.inverse();
  } else if (!a.is_zero() && b.is_zero() && c.is_zero()) {
    out.row_id = 1;
    alpha = a.inverse();
  } else if (a.is_zero() && b.is_zero() && !c.is_zero()) {
    out.row_id = 2;
    beta = c.inverse();
  } else if (!a.is_zero() && !b.is_zero() && c.is_zero()) {
    out.row_id = 4;
    alpha = a.inverse();
    beta = a / b;
  } else if (a.is_zero() && !b.is_zero() && !c.is_zero()) {
    out.row_id = 5;
    alpha = c / b;
    beta = c.inverse();
  } else {  // a = 0, b != 0, c = 0
    out.row_id = 6;
    beta = b.inverse();
  }

  RatMatrix d(3);
  d.at(0, 0) = Rational(1);
  d.at(1, 1) = alpha;
  d.at(2, 2) = alpha * beta;
  // Scalar rescaling does not change the adjoint action; take the chance to
  // report a determinant-one representative when a rational cube root exists.
  if (auto delta = rational_cbrt(d.det().inverse())) d = *delta * d;
  out.transform = std::move(d);
  out.normal_form =
      table_row_matrix(out.row_id, out.parameter ? *out.parameter : Rational(0));
  return out;
}

const char* conjugacy_name(const ConjugacyOutcome& o) {
  if (std::holds_alternative<Conjugate>(o)) return "conjugate";
  if (std::holds_alternative<NotConjugate>(o)) return "not-conjugate";
  return "undetermined";
}

ConjugacyOutcome p_conjugacy_search(const FlagContext& ctx, const RatMatrix& x1,
                                    const RatMatrix& x2, long long budget) {
  if (x1.n() != ctx.n || x2.n() != ctx.n)
    throw DomainError("matrix size does not match the block structure");
  if (!in_nilradical(x1, ctx) || !in_nilradical(x2, ctx))
    throw NilradicalPatternError("both elements must lie in the nilradical");

  const auto diag = ctx.diag_positions();
  const auto above = ctx.above_positions();
  std::vector<std::string> vars;
  vars.reserve(diag.size() + above.size() + 1);
  std::vector<std::string> l_names, z_names;
  for (auto [i, j] : diag)
    l_names.push_back("l" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  for (auto [i, j] : above)
    z_names.push_back("z" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  vars.insert(vars.end(), l_names.begin(), l_names.end());
  vars.insert(vars.end(), z_names.begin(), z_names.end());
  vars.push_back("s");
  RingPtr ring = PolyRing::make(vars);

  PolyMatrix l(ring, ctx.n);
  {
    size_t k = 0;
    for (auto [i, j] : diag) l.at(i, j) = MultiPoly::variable(ring, l_names[k++]);
  }
  PolyMatrix z(ring, ctx.n);
  {
    size_t k = 0;
    for (auto [i, j] : above) z.at(i, j) = MultiPoly::variable(ring, z_names[k++]);
  }
  PolyMatrix p = l * exp_nilpotent(z, MultiPoly::constant(ring, Rational(1)), ctx.n);
  PolyMatrix lhs = p * PolyMatrix::from_rational(ring, x1) -
                   PolyMatrix::from_rational(ring, x2) * p;

  std::vector<MultiPoly> equations;
  for (int i = 0; i < ctx.n; ++i)
    for (int j = 0; j < ctx.n; ++j) {
      const MultiPoly& e = lhs.at(i, j);
      if (e.is_zero()) continue;
      if (std::find(equations.begin(), equations.end(), e) == equations.end())
        equations.push_back(e);
    }
  // Invertibility of l, cleared by the auxiliary unknown s.
  equations.push_back(l.det() * MultiPoly::variable(ring, "s") -
                      MultiPoly::constant(ring, Rational(1)));

  SolveOutcome out = find_rational_witness(PolySystem{ring, equations}, budget);
  if (auto* w = std::get_if<Witness>(&out)) {
    RatMatrix pm = p.eval(w->assignment);
    if (adjoint(pm, x1) != x2) return ConjugacyUndetermined{"witness-verification-failed"};
    return Conjugate{std::move(pm)};
  }
  if (auto* inc = std::get_if<Inconsistent>(&out))
    return NotConjugate{std::move(inc->certificate)};
  return ConjugacyUndetermined{std::move(std::get<Unknown>(out).reason)};
}

TableReport reproduce_table(long long budget, bool corrupt) {
  const FlagContext ctx = FlagContext::borel(3);
  TableReport report;
  report.all_ok = true;

  auto add_row = [&](int row_id, std::optional<Rational> param) {
    TableRowReport row;
    row.row_id = row_id;
    row.parameter = param;
    row.x = table_row_matrix(row_id, param ? *param : Rational(0));
    row.expected = row_id == 7 ? "affine-only" : "projective";
    if (corrupt && row_id == 1) row.expected = "affine-only";
    row.result = classify_curve(ctx, row.x, budget);
    row.computed = classification_name(row.result);
    row.ok = row.expected == row.computed;
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(std::move(row));
  };
  for (int row = 1; row <= 6; ++row)
    add_row(row, row == 3 ? std::optional<Rational>(Rational(0)) : std::nullopt);
  for (const auto& x : {Rational(1), Rational(-1), Rational(2), Rational(1, 2)})
    add_row(7, x);

  const std::pair<int, int> pairs[] = {{4, 5}, {4, 6}, {5, 6}};
  for (auto [first, second] : pairs) {
    TableConjugacyReport cj;
    cj.first_row = first;
    cj.second_row = second;
    ConjugacyOutcome out =
        p_conjugacy_search(ctx, table_row_matrix(first), table_row_matrix(second), budget);
    cj.outcome = conjugacy_name(out);
    if (auto* c = std::get_if<Conjugate>(&out)) cj.p = std::move(c->p);
    cj.ok = cj.outcome == std::string("conjugate");
    report.all_ok = report.all_ok && cj.ok;
    report.conjugacies.push_back(std::move(cj));
  }
  return report;
}

}  // namespace flagcurves
