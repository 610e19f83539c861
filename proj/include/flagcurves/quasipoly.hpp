#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "flagcurves/rational.hpp"
#include "flagcurves/series.hpp"

namespace flagcurves {

enum class TrigKind { One, Cos, Sin };

// Canonical basis function x^power * exp(exp_rate * x) * trig(trig_rate * x).
// Canonical means trig_rate > 0 for Cos/Sin and trig_rate = 0 for One.
struct QuasiKey {
  uint32_t power = 0;
  Rational exp_rate;
  Rational trig_rate;
  TrigKind kind = TrigKind::One;

  bool operator==(const QuasiKey& o) const;
  bool operator<(const QuasiKey& o) const;
};

// Exact quasi-polynomial: finite rational combination of the basis functions.
// Closed under addition, multiplication (product-to-sum identities), and
// differentiation; tan/tanh are deliberately not representable.
class QuasiPoly {
 public:
  QuasiPoly() = default;

  static QuasiPoly constant(const Rational& c);
  // coeff * x^power * exp(exp_rate x) * kind(trig_rate x); any sign of
  // trig_rate is accepted and normalized.
  static QuasiPoly monomial(const Rational& coeff, uint32_t power,
                            const Rational& exp_rate = Rational(0),
                            const Rational& trig_rate = Rational(0),
                            TrigKind kind = TrigKind::One);

  // Grammar: sum of '+'/'-'-separated terms; each term a '*'-separated product
  // of factors: rational | x[^k] | exp(R x) | sin(R x) | cos(R x) |
  // sinh(R x) | cosh(R x), with R a rational rate (default 1, '*' or space
  // optional). sinh/cosh expand into exponentials.
  static QuasiPoly parse(const std::string& text);

  const std::map<QuasiKey, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  QuasiPoly operator-() const;
  friend QuasiPoly operator+(const QuasiPoly& a, const QuasiPoly& b);
  friend QuasiPoly operator-(const QuasiPoly& a, const QuasiPoly& b);
  friend QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b);
  friend QuasiPoly operator*(const Rational& c, const QuasiPoly& p);
  QuasiPoly& operator+=(const QuasiPoly& o);
  QuasiPoly& operator-=(const QuasiPoly& o);
  bool operator==(const QuasiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const QuasiPoly& o) const { return !(*this == o); }

  QuasiPoly derivative() const;

  TruncatedSeries to_series(std::string var, int order) const;

  std::string str() const;

 private:
  void add_term(QuasiKey key, Rational coeff);

  std::map<QuasiKey, Rational> t_;
};

}  // namespace flagcurves
