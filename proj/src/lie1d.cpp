#include "flagcurves/lie1d.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flagcurves/errors.hpp"
#include "flagcurves/matrices.hpp"
#include "flagcurves/ratfunc.hpp"

namespace flagcurves {

std::string VectorField1D::str() const { return "(" + coeff.str() + ")*d/dx"; }

VectorField1D VectorField1D::parse(const std::string& text) {
  // Accept either a bare coefficient or the emitted "(coeff)*d/dx" form.
  std::string body = text;
  const size_t mark = body.rfind("*d/dx");
  if (mark != std::string::npos && mark + 5 == body.size()) {
    body = body.substr(0, mark);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
      body = body.substr(1, body.size() - 2);
  }
  return VectorField1D{QuasiPoly::parse(body)};
}

VectorField1D bracket(const VectorField1D& f, const VectorField1D& g) {
  return VectorField1D{f.coeff * g.coeff.derivative() - g.coeff * f.coeff.derivative()};
}

namespace {

// Rows: every QuasiKey appearing in the basis or target; columns: basis
// fields; the solve is plain Gauss elimination over the rationals.
struct SpanSystem {
  std::vector<QuasiKey> keys;
  std::vector<std::vector<Rational>> rows;  // rows x (basis + 1) augmented

  SpanSystem(const VectorField1D& f, const std::vector<VectorField1D>& basis) {
    std::set<QuasiKey> keyset;
    for (const auto& [k, c] : f.coeff.terms()) keyset.insert(k);
    for (const auto& b : basis)
      for (const auto& [k, c] : b.coeff.terms()) keyset.insert(k);
    keys.assign(keyset.begin(), keyset.end());
    rows.assign(keys.size(), std::vector<Rational>(basis.size() + 1, Rational(0)));
    for (size_t r = 0; r < keys.size(); ++r) {
      for (size_t c = 0; c < basis.size(); ++c) {
        auto it = basis[c].coeff.terms().find(keys[r]);
        if (it != basis[c].coeff.terms().end()) rows[r][c] = it->second;
      }
      auto it = f.coeff.terms().find(keys[r]);
      if (it != f.coeff.terms().end()) rows[r].back() = it->second;
    }
  }
};

}  // namespace

std::optional<std::vector<Rational>> span_membership(const VectorField1D& f,
                                                     const std::vector<VectorField1D>& basis) {
  const size_t ncols = basis.size();
  SpanSystem sys(f, basis);
  auto& rows = sys.rows;
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const Rational inv = rows[rank][col].inverse();
    for (auto& v : rows[rank]) v *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (size_t c = col; c <= ncols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r)
    if (!rows[r].back().is_zero()) return std::nullopt;
  std::vector<Rational> coeffs(ncols, Rational(0));
  for (size_t r = 0; r < rank; ++r) coeffs[pivot_col[r]] = rows[r].back();
  return coeffs;
}

size_t span_dimension(const std::vector<VectorField1D>& basis) {
  if (basis.empty()) return 0;
  SpanSystem sys(VectorField1D{}, basis);
  auto& rows = sys.rows;
  const size_t ncols = basis.size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

ClosureReport check_closure(const std::vector<VectorField1D>& basis) {
  if (basis.empty()) throw DomainError("closure check needs a nonempty basis");
  ClosureReport report;
  report.dimension = span_dimension(basis);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      VectorField1D br = bracket(basis[i], basis[j]);
      if (!span_membership(br, basis)) {
        report.closed = false;
        report.counterexample = ClosureCounterexample{i, j, std::move(br)};
        return report;
      }
    }
  report.closed = true;
  return report;
}

std::vector<VectorField1D> line_algebra_basis(int index, const Rational& lambda) {
  if (lambda.is_zero() && (index == 2 || index == 4 || index == 6))
    throw DomainError("lambda must be nonzero for this algebra");
  const QuasiPoly one = QuasiPoly::constant(Rational(1));
  const QuasiPoly x = QuasiPoly::monomial(Rational(1), 1);
  switch (index) {
    case 1: return {VectorField1D{one}};
    case 2:
      return {VectorField1D{one}, VectorField1D{QuasiPoly::monomial(Rational(1), 0, lambda)}};
    case 3: return {VectorField1D{one}, VectorField1D{x}};
    case 4:
      return {VectorField1D{one},
              VectorField1D{QuasiPoly::monomial(Rational(1), 0, Rational(0), lambda,
                                                TrigKind::Sin)},
              VectorField1D{QuasiPoly::monomial(Rational(1), 0, Rational(0), lambda,
                                                TrigKind::Cos)}};
    case 5:
      return {VectorField1D{one}, VectorField1D{x},
              VectorField1D{QuasiPoly::monomial(Rational(1), 2)}};
    case 6: {
      const Rational half(1, 2);
      QuasiPoly sinh_l =
          QuasiPoly::monomial(half, 0, lambda) + QuasiPoly::monomial(-half, 0, -lambda);
      QuasiPoly cosh_l =
          QuasiPoly::monomial(half, 0, lambda) + QuasiPoly::monomial(half, 0, -lambda);
      return {VectorField1D{one}, VectorField1D{std::move(sinh_l)},
              VectorField1D{std::move(cosh_l)}};
    }
    default: throw DomainError("line algebras are indexed 1..6");
  }
}

namespace {

bool starts_x_squared(const QuasiPoly& g) {
  TruncatedSeries s = g.to_series("x", 4);
  return s.coeff(0).is_zero() && s.coeff(1).is_zero() && s.coeff(2).is_one() &&
         s.coeff(3).is_zero();
}

}  // namespace

CheckReport verify_ode_solutions() {
  CheckReport report;
  const QuasiPoly two = QuasiPoly::constant(Rational(2));

  // g' = mu + lambda*g, lambda = 0 branch: g = mu*x + C.
  {
    const Rational mu(5), cc(7);
    QuasiPoly g = QuasiPoly::monomial(mu, 1) + QuasiPoly::constant(cc);
    QuasiPoly residual = g.derivative() - QuasiPoly::constant(mu);
    report.add("first-order-linear", residual.is_zero(), "g = 5x + 7, mu = 5, lambda = 0");
  }
  // g'' = 2 + nu*g, nu = 0 branch: g = x^2.
  {
    QuasiPoly g = QuasiPoly::monomial(Rational(1), 2);
    QuasiPoly residual = g.derivative().derivative() - two;
    report.add("second-order-quadratic", residual.is_zero() && starts_x_squared(g),
               "g = x^2, nu = 0");
  }

  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 2)}) {
    const std::string suffix = " lambda=" + lambda.str();
    // g = C exp(lambda x) + D solves g' = mu + lambda g with mu = -lambda D.
    {
      const Rational C(3), D(-2);
      QuasiPoly g = QuasiPoly::monomial(C, 0, lambda) + QuasiPoly::constant(D);
      const Rational mu = -(lambda * D);
      QuasiPoly residual = g.derivative() - QuasiPoly::constant(mu) - lambda * g;
      report.add("first-order-exponential" + suffix, residual.is_zero(),
                 "g = 3*exp(lambda x) - 2, mu = 2*lambda");
    }
    const Rational nu_pos = lambda * lambda;
    const Rational scale = Rational(2) / nu_pos;
    // Trigonometric branch, nu = -lambda^2: g = (2/lambda^2)(1 - cos(lambda x)).
    {
      QuasiPoly g = QuasiPoly::constant(scale) -
                    QuasiPoly::monomial(scale, 0, Rational(0), lambda, TrigKind::Cos);
      QuasiPoly residual = g.derivative().derivative() - two - (-nu_pos) * g;
      report.add("second-order-trigonometric" + suffix,
                 residual.is_zero() && starts_x_squared(g),
                 "g = (2/lambda^2)(1 - cos(lambda x)), nu = -lambda^2");
    }
    // Hyperbolic branch, nu = +lambda^2: g = (2/lambda^2)(cosh(lambda x) - 1).
    {
      const Rational half(1, 2);
      QuasiPoly cosh_l =
          QuasiPoly::monomial(half, 0, lambda) + QuasiPoly::monomial(half, 0, -lambda);
      QuasiPoly g = scale * (cosh_l - QuasiPoly::constant(Rational(1)));
      QuasiPoly residual = g.derivative().derivative() - two - nu_pos * g;
      report.add("second-order-hyperbolic" + suffix,
                 residual.is_zero() && starts_x_squared(g),
                 "g = (2/lambda^2)(cosh(lambda x) - 1), nu = lambda^2");
    }
  }
  // Derived series shape at lambda = 1: g = 2(1 - cos x) = x^2 (1 - x^2/12 + ...).
  {
    QuasiPoly g = QuasiPoly::constant(Rational(2)) -
                  QuasiPoly::monomial(Rational(2), 0, Rational(0), Rational(1), TrigKind::Cos);
    TruncatedSeries s = g.to_series("x", 6);
    bool ok = s.coeff(2).is_one() && s.coeff(3).is_zero() &&
              s.coeff(4) == Rational(-1, 12) && s.coeff(5).is_zero();
    report.add("second-order-trigonometric-series", ok, "x^2 - x^4/12 + O(x^6)");
  }
  return report;
}

const char* coord_change_name(CoordChangeKind kind) {
  switch (kind) {
    case CoordChangeKind::Exp: return "exp-change";
    case CoordChangeKind::Tan: return "tan-change";
    case CoordChangeKind::Tanh: return "tanh-change";
  }
  return "?";
}

CheckReport verify_coord_change(const CoordChange& change) {
  if (change.lambda.is_zero()) throw DomainError("coordinate change needs nonzero lambda");
  if (change.order < 8) throw DomainError("series order must be at least 8");
  CheckReport report;
  const Rational& l = change.lambda;
  const Rational half_l = l / Rational(2);
  const int n = change.order;
  const std::string var = "x";

  if (change.kind == CoordChangeKind::Exp) {
    // phi = (1 - exp(-lambda x)) / lambda, exact.
    const Rational inv_l = l.inverse();
    QuasiPoly phi =
        QuasiPoly::constant(inv_l) - QuasiPoly::monomial(inv_l, 0, -l);
    QuasiPoly dphi = phi.derivative();
    QuasiPoly exp_l = QuasiPoly::monomial(Rational(1), 0, l);
    report.add("origin-fixed", phi.to_series(var, 2).coeff(0).is_zero(), "phi(0) = 0");
    report.add("exponential-field-exact",
               exp_l * dphi == QuasiPoly::constant(Rational(1)),
               "exp(lambda x) d/dx -> d/dy");
    report.add("unit-field-exact",
               dphi == QuasiPoly::constant(Rational(1)) - l * phi,
               "d/dx -> (1 - lambda y) d/dy");
    report.add("zero-field", (QuasiPoly() * dphi).is_zero(), "0 -> 0");
    // Series backend agreement on the same identities.
    TruncatedSeries phis = phi.to_series(var, n);
    TruncatedSeries dphis = phis.derivative();
    TruncatedSeries exps = TruncatedSeries::elementary(ElemFn::Exp, l, var, n).truncated(n - 1);
    bool s1 = exps * dphis == TruncatedSeries::constant(var, n - 1, Rational(1));
    bool s2 = dphis == (TruncatedSeries::constant(var, n, Rational(1)) - l * phis).truncated(n - 1);
    report.add("series-consistency", s1 && s2,
               "exact and order-" + std::to_string(n) + " checks agree");
    return report;
  }

  const bool hyper = change.kind == CoordChangeKind::Tanh;
  // phi = tan(lambda x / 2) or tanh(lambda x / 2), as an order-n series.
  TruncatedSeries phi = TruncatedSeries::elementary(hyper ? ElemFn::Tanh : ElemFn::Tan, half_l,
                                                    var, n);
  TruncatedSeries dphi = phi.derivative();  // order n - 1
  auto tr = [&](TruncatedSeries s) { return s.truncated(n - 1); };
  const TruncatedSeries one = TruncatedSeries::constant(var, n, Rational(1));
  const TruncatedSeries phi2 = phi * phi;

  report.add("origin-fixed", phi.coeff(0).is_zero(), "phi(0) = 0");
  {
    // d/dx -> (lambda/2)(1 +- y^2) d/dy.
    TruncatedSeries rhs = hyper ? half_l * (one - phi2) : half_l * (one + phi2);
    report.add("unit-field", dphi == tr(rhs),
               hyper ? "d/dx -> (lambda/2)(1 - y^2) d/dy"
                     : "d/dx -> (lambda/2)(1 + y^2) d/dy");
  }
  {
    // sin(lambda x) d/dx (resp. sinh) -> lambda y d/dy.
    TruncatedSeries f =
        TruncatedSeries::elementary(hyper ? ElemFn::Sinh : ElemFn::Sin, l, var, n);
    report.add(hyper ? "hyperbolic-sine-field" : "sine-field",
               tr(f) * dphi == tr(l * phi),
               hyper ? "sinh(lambda x) d/dx -> lambda y d/dy"
                     : "sin(lambda x) d/dx -> lambda y d/dy");
  }
  {
    // cos(lambda x) d/dx -> (lambda/2)(1 - y^2); cosh -> (lambda/2)(1 + y^2).
    TruncatedSeries f =
        TruncatedSeries::elementary(hyper ? ElemFn::Cosh : ElemFn::Cos, l, var, n);
    TruncatedSeries rhs = hyper ? half_l * (one + phi2) : half_l * (one - phi2);
    report.add(hyper ? "hyperbolic-cosine-field" : "cosine-field",
               tr(f) * dphi == tr(rhs),
               hyper ? "cosh(lambda x) d/dx -> (lambda/2)(1 + y^2) d/dy"
                     : "cos(lambda x) d/dx -> (lambda/2)(1 - y^2) d/dy");
  }
  report.add("zero-field", (TruncatedSeries(var, n - 1) * dphi).is_zero(), "0 -> 0");
  return report;
}

namespace {

// Adjoint matrix of the field f d/dx inside span{d, x d, x^2 d}: column j
// holds the span coordinates of [f d/dx, basis_j].
RatMatrix quadratic_adjoint_matrix(const VectorField1D& f,
                                   const std::vector<VectorField1D>& basis, bool& ok) {
  RatMatrix m(3);
  ok = true;
  for (size_t j = 0; j < 3; ++j) {
    auto coords = span_membership(bracket(f, basis[j]), basis);
    if (!coords) {
      ok = false;
      return m;
    }
    for (size_t i = 0; i < 3; ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = (*coords)[i];
  }
  return m;
}

}  // namespace

CheckReport flow_identities() {
  CheckReport report;

  // Symbolic in p and q: x(t) = p^2 t / (1 + p q t) solves dx/dt = (p - q x)^2.
  {
    RingPtr ring = PolyRing::make({"p", "q", "t"});
    MultiPoly p = MultiPoly::variable(ring, "p"), q = MultiPoly::variable(ring, "q"),
              t = MultiPoly::variable(ring, "t");
    MultiPoly one = MultiPoly::constant(ring, Rational(1));
    RationalFunction x(p * p * t, one + p * q * t);
    RationalFunction rhs =
        (RationalFunction(p) - RationalFunction(q) * x) * (RationalFunction(p) - RationalFunction(q) * x);
    report.add("projective-flow-symbolic", x.derivative("t") == rhs,
               "d/dt [p^2 t/(1+pqt)] = (p - qx)^2");
    report.add("projective-flow-origin",
               x.num().substitute_values({{"t", Rational(0)}}).is_zero(), "x(0) = 0");
    // Affine flow: x = a t has constant velocity a.
    RingPtr aring = PolyRing::make({"a", "t"});
    RationalFunction ax(MultiPoly::variable(aring, "a") * MultiPoly::variable(aring, "t"));
    report.add("affine-flow-symbolic",
               ax.derivative("t") == RationalFunction(MultiPoly::variable(aring, "a")),
               "d/dt [a t] = a");
  }

  // Rational samples, including the degenerate q = 0 and p = 0 cases.
  const std::pair<Rational, Rational> samples[] = {
      {Rational(1), Rational(1)}, {Rational(2), Rational(3)}, {Rational(1, 2), Rational(-1)}};
  RingPtr tring = PolyRing::make({"t"});
  MultiPoly t = MultiPoly::variable(tring, "t");
  MultiPoly one = MultiPoly::constant(tring, Rational(1));
  for (const auto& [p, q] : samples) {
    const std::string suffix = " p=" + p.str() + " q=" + q.str();
    RationalFunction x(MultiPoly::constant(tring, p * p) * t,
                       one + MultiPoly::constant(tring, p * q) * t);
    RationalFunction rhs = (RationalFunction::constant(tring, p) -
                            RationalFunction::constant(tring, q) * x);
    report.add("projective-flow-sample" + suffix, x.derivative("t") == rhs * rhs,
               "dx/dt = (p - qx)^2");
  }
  {
    const Rational p(3);
    RationalFunction x(MultiPoly::constant(tring, p * p) * t);
    report.add("affine-degeneration q=0",
               x.derivative("t") == RationalFunction::constant(tring, p * p),
               "x = p^2 t, dx/dt = p^2");
  }
  {
    RationalFunction x(MultiPoly::zero(tring));
    report.add("fixed-point p=0", x.num().is_zero() && x.derivative("t").num().is_zero(),
               "x stays at the origin");
  }

  // Adjoint nilpotency of (p - qx)^2 d/dx inside span{d, x d, x^2 d}.
  const std::vector<VectorField1D> basis = line_algebra_basis(5, Rational(1));
  for (const auto& [p, q] : samples) {
    const std::string suffix = " p=" + p.str() + " q=" + q.str();
    QuasiPoly fq = QuasiPoly::constant(p * p) - QuasiPoly::monomial(Rational(2) * p * q, 1) +
                   QuasiPoly::monomial(q * q, 2);
    VectorField1D f{fq};
    bool in_span = true;
    for (const auto& h : basis)
      in_span = in_span && span_membership(bracket(f, bracket(f, h)), basis).has_value();
    bool ok = false;
    RatMatrix ad = quadratic_adjoint_matrix(f, basis, ok);
    RatMatrix cube = ad * ad * ad;
    report.add("adjoint-nilpotent" + suffix, in_span && ok && cube.is_zero(),
               "double brackets stay in span; ad matrix cubes to zero");
  }
  return report;
}

}  // namespace flagcurves
