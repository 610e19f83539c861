#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcurves/rational.hpp"

namespace flagcurves {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Ordered list of variable names; the order is the elimination/term order
// significance of the variables (earlier = larger).
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> vars);

  size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(size_t i) const { return vars_.at(i); }
  std::optional<size_t> index_of(std::string_view name) const;
  bool same_vars(const PolyRing& o) const { return vars_ == o.vars_; }

 private:
  explicit PolyRing(std::vector<std::string> vars);
  std::vector<std::string> vars_;
  std::map<std::string, size_t, std::less<>> index_;
};

// Variables of a, followed by the variables of b not already present.
RingPtr merged_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::vector<uint32_t>;

enum class MonomialOrder { GrLex, GrevLex, Lex };

const char* order_name(MonomialOrder o);
std::optional<MonomialOrder> order_from_name(std::string_view name);

uint64_t exponent_degree(const Exponents& e);
// +1 if a > b, 0 if equal, -1 if a < b.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order);
bool monomial_divides(const Exponents& a, const Exponents& b);
Exponents monomial_quotient(const Exponents& b, const Exponents& a);
Exponents monomial_lcm(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exp;
  Rational coeff;
};

// Sparse exact multivariate polynomial over the rationals. Terms are kept in
// descending graded-lex order with nonzero coefficients only.
class MultiPoly {
 public:
  MultiPoly() = default;  // detached zero; only valid as a container default

  static MultiPoly zero(RingPtr ring);
  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, size_t index);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly monomial(RingPtr ring, Exponents exp, const Rational& c);
  static MultiPoly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); zero gives 0.
  Rational constant_value() const;
  uint32_t degree_in(size_t var) const;
  uint64_t total_degree() const;  // 0 for the zero polynomial
  bool uses_var(size_t var) const { return degree_in(var) > 0; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p.scaled(c); }
  friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p.scaled(c); }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(uint32_t k) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // nullptr for the zero polynomial.
  const Term* leading_term(MonomialOrder order) const;

  // Dense coefficient list in the given variable: entry k is the coefficient
  // of var^k (a polynomial over the same ring, free of var). Size is
  // degree_in(var) + 1; a var-free polynomial gives a one-element list.
  std::vector<MultiPoly> coefficients_in(size_t var) const;

  MultiPoly derivative(size_t var) const;

  // Substitute variables by polynomials (missing variables stay themselves).
  // The result lives in the merge of this ring with all replacement rings.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& subs) const;
  // Substitute variables by rationals, keeping the ring.
  MultiPoly substitute_values(const std::map<std::string, Rational>& subs) const;
  // Full evaluation; every variable that actually appears must be assigned.
  Rational eval(const std::map<std::string, Rational>& point) const;

  // Re-express over a ring that contains every variable this polynomial uses
  // (the target may drop unused variables).
  MultiPoly mapped_to(const RingPtr& target) const;

  std::string str() const;

 private:
  MultiPoly(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static MultiPoly from_accumulator(RingPtr ring, std::map<Exponents, Rational>& acc);
  void check_compatible(const MultiPoly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;  // descending GrLex, nonzero coefficients
};

// True if the two polynomials are equal up to a nonzero rational factor (two
// zero polynomials count as proportional); if so, *factor (when non-null)
// receives c with a == c*b.
bool proportional(const MultiPoly& a, const MultiPoly& b, Rational* factor = nullptr);

}  // namespace flagcurves
