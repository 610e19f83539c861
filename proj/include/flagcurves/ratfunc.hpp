#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagcurves/multipoly.hpp"
#include "flagcurves/series.hpp"

namespace flagcurves {

// True if p uses no variable other than var (it may use none).
bool is_univariate_in(const MultiPoly& p, size_t var);

// Dense coefficient list (constant Rationals) of a polynomial univariate in
// var; index k is the coefficient of var^k.
std::vector<Rational> dense_univariate(const MultiPoly& p, size_t var);

MultiPoly poly_from_dense(const RingPtr& ring, size_t var, const std::vector<Rational>& coeffs);

// Univariate division with remainder: a = q*b + r with deg r < deg b.
std::pair<MultiPoly, MultiPoly> poly_divmod_univariate(const MultiPoly& a, const MultiPoly& b, size_t var);

// Monic univariate gcd (Euclid); gcd(0, 0) = 0.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, size_t var);

// Quotient of multivariate polynomials. Canonical form: the denominator is
// nonzero with leading coefficient 1 (graded-lex); when numerator and
// denominator involve at most one common variable the fraction is fully
// reduced by the univariate gcd.
class RationalFunction {
 public:
  RationalFunction(MultiPoly num, MultiPoly den);
  explicit RationalFunction(MultiPoly num);
  static RationalFunction constant(RingPtr ring, const Rational& c);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  // Equality of the represented functions (cross-multiplication).
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction derivative(const std::string& var) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;

  // Series expansion about 0 for a function univariate in var; requires
  // den(0) != 0.
  TruncatedSeries series_expand(const std::string& var, int order) const;

  std::string str() const;

 private:
  void normalise();
  MultiPoly num_, den_;
};

}  // namespace flagcurves
