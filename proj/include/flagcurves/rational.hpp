#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "flagcurves/errors.hpp"

namespace flagcurves {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Always normalised: lowest terms, positive
// denominator, zero stored as 0/1. Text format: optional leading '-', a
// decimal integer, optionally followed by '/' and a positive decimal integer
// ("-3/8", "0", "2").
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int v) : v_(v) {}
  Rational(long long v) : v_(v) {}
  Rational(const Integer& v) : v_(v) {}
  Rational(const Integer& num, const Integer& den) : v_(make(num, den)) {}

  static Rational parse(std::string_view text);

  Integer num() const { return boost::multiprecision::numerator(v_); }
  Integer den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return den() == 1; }
  bool is_negative() const { return v_ < 0; }
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(1) / *this;
  }

  Rational abs() const { return is_negative() ? -*this : *this; }

  // Integer exponent; negative exponents require a nonzero base.
  Rational pow(long long k) const;

  std::string str() const;

 private:
  using BigRat = boost::multiprecision::cpp_rational;

  explicit Rational(BigRat v) : v_(std::move(v)) {}

  static BigRat make(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    // the backing type rejects negative denominators; normalise the sign here
    if (den < 0) return BigRat(-num, -den);
    return BigRat(num, den);
  }

  BigRat v_;
};

inline Rational Rational::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Rational result(1);
  Rational base = *this;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e > 0) {
    if (e & 1ULL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

inline std::string Rational::str() const {
  std::string s = num().str();
  if (!is_integer()) {
    s += '/';
    s += den().str();
  }
  return s;
}

inline Rational Rational::parse(std::string_view text) {
  size_t i = 0;
  const size_t n = text.size();
  bool negative = false;
  if (i < n && text[i] == '-') {
    negative = true;
    ++i;
  }
  size_t num_begin = i;
  while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_begin) throw ParseError("bad rational: '" + std::string(text) + "'");
  Integer num(std::string(text.substr(num_begin, i - num_begin)));
  Integer den(1);
  if (i < n && text[i] == '/') {
    ++i;
    size_t den_begin = i;
    while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin) throw ParseError("bad rational: '" + std::string(text) + "'");
    den = Integer(std::string(text.substr(den_begin, i - den_begin)));
    if (den == 0) throw ParseError("bad rational (zero denominator): '" + std::string(text) + "'");
  }
  if (i != n) throw ParseError("bad rational: '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

// Exact cube root if the argument is the cube of a rational.
std::optional<Rational> rational_cbrt(const Rational& v);

// Exact integer cube root if n is a perfect cube (any sign).
std::optional<Integer> integer_cbrt(const Integer& n);

}  // namespace flagcurves
