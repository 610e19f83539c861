#pragma once

#include <string>
#include <vector>

#include "flagcurves/rational.hpp"

namespace flagcurves {

enum class ElemFn { Exp, Sin, Cos, Sinh, Cosh, Tan, Tanh };

const char* elem_fn_name(ElemFn fn);

// Power series in one variable truncated at a fixed order: a series of order
// N stores the coefficients of degrees 0..N-1 exactly; degree >= N is
// unknown. Operations require matching variable and order.
class TruncatedSeries {
 public:
  TruncatedSeries(std::string var, int order);
  static TruncatedSeries from_coeffs(std::string var, int order, std::vector<Rational> coeffs);
  static TruncatedSeries constant(std::string var, int order, const Rational& c);
  static TruncatedSeries identity(std::string var, int order);  // the series "x"

  // Series of fn(scale * x) about 0.
  static TruncatedSeries elementary(ElemFn fn, const Rational& scale, std::string var, int order);

  const std::string& var() const { return var_; }
  int order() const { return order_; }
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries s);
  // Requires b.coeff(0) != 0.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  // this(inner); requires inner.coeff(0) == 0. Result is a series in
  // inner.var() of the common order.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  TruncatedSeries derivative() const;  // order drops by one: the top coefficient is unknown
  TruncatedSeries truncated(int order) const;

  std::string str() const;

 private:
  void check_same(const TruncatedSeries& o) const;

  std::string var_;
  int order_;
  std::vector<Rational> c_;
};

}  // namespace flagcurves
