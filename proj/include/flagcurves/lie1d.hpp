#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagcurves/quasipoly.hpp"
#include "flagcurves/report.hpp"

namespace flagcurves {

// The vector field coeff(x) * d/dx on the line.
struct VectorField1D {
  QuasiPoly coeff;

  bool operator==(const VectorField1D& o) const { return coeff == o.coeff; }
  bool operator!=(const VectorField1D& o) const { return !(*this == o); }
  std::string str() const;
  static VectorField1D parse(const std::string& text);
};

// [f d/dx, g d/dx] = (f g' - g f') d/dx, exact.
VectorField1D bracket(const VectorField1D& f, const VectorField1D& g);

// Exact rational coordinates of f in the span of the basis; nullopt when f is
// outside. A dependent basis is fine (one valid coordinate vector is picked).
std::optional<std::vector<Rational>> span_membership(const VectorField1D& f,
                                                     const std::vector<VectorField1D>& basis);

// Rank of the basis as a set of quasi-polynomial coordinate vectors.
size_t span_dimension(const std::vector<VectorField1D>& basis);

struct ClosureCounterexample {
  size_t first = 0;   // indices into the basis:
  size_t second = 0;  // the failing bracket is [basis[first], basis[second]]
  VectorField1D value;
};
struct ClosureReport {
  bool closed = false;
  size_t dimension = 0;
  std::optional<ClosureCounterexample> counterexample;
};

// Checks every pairwise bracket for span membership.
ClosureReport check_closure(const std::vector<VectorField1D>& basis);

// The six model subalgebras on the line, indexed 1..6:
//   1: {d}            2: {d, exp(Lx) d}        3: {d, x d}
//   4: {d, sin(Lx) d, cos(Lx) d}               5: {d, x d, x^2 d}
//   6: {d, sinh(Lx) d, cosh(Lx) d}
std::vector<VectorField1D> line_algebra_basis(int index, const Rational& lambda);

// Verifies the model ordinary differential equations exactly: g' = mu + lambda*g
// for exponential-plus-constant g, and g'' = 2 + nu*g for the trigonometric
// (nu < 0), quadratic (nu = 0), and hyperbolic (nu > 0) solutions, each with
// series expansion starting x^2 + 0*x^3.
CheckReport verify_ode_solutions();

enum class CoordChangeKind { Exp, Tan, Tanh };
const char* coord_change_name(CoordChangeKind kind);

// A coordinate change y = phi(x) fixing the origin. Exp is verified exactly in
// QuasiPoly (phi = (1 - exp(-lambda x)) / lambda); Tan and Tanh use
// phi = tan(lambda x / 2), tanh(lambda x / 2) verified as truncated series
// with exact coefficients.
struct CoordChange {
  CoordChangeKind kind = CoordChangeKind::Exp;
  Rational lambda = Rational(1);  // must be nonzero
  int order = 24;                 // series order; at least 8
};

// Each claimed push-forward f(x) d/dx -> g(y) d/dy is checked as the identity
// f(x) * phi'(x) == g(phi(x)).
CheckReport verify_coord_change(const CoordChange& change);

// Exact flow identities: x(t) = p^2 t / (1 + p q t) solves dx/dt = (p - qx)^2
// with x(0) = 0 (symbolically in p, q and on rational samples), x(t) = a t
// solves dx/dt = a, and the quadratic field (p - qx)^2 d/dx is nilpotent in
// the adjoint representation of the three-dimensional polynomial algebra.
CheckReport flow_identities();

}  // namespace flagcurves
