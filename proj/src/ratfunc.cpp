#include "flagcurves/ratfunc.hpp"

#include <optional>

#include "flagcurves/errors.hpp"

namespace flagcurves {

bool is_univariate_in(const MultiPoly& p, size_t var) {
  for (const auto& t : p.terms())
    for (size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] > 0 && i != var) return false;
  return true;
}

std::vector<Rational> dense_univariate(const MultiPoly& p, size_t var) {
  if (!is_univariate_in(p, var))
    throw DomainError("polynomial is not univariate in " + p.ring()->var(var));
  std::vector<Rational> out(p.degree_in(var) + 1, Rational(0));
  for (const auto& t : p.terms()) out[t.exp[var]] = t.coeff;
  return out;
}

MultiPoly poly_from_dense(const RingPtr& ring, size_t var, const std::vector<Rational>& coeffs) {
  MultiPoly out = MultiPoly::zero(ring);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    Exponents e(ring->arity(), 0);
    e[var] = static_cast<uint32_t>(k);
    out += MultiPoly::monomial(ring, std::move(e), coeffs[k]);
  }
  return out;
}

namespace {

void dense_trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// a = q*b + r on dense vectors; b nonzero.
std::pair<std::vector<Rational>, std::vector<Rational>> dense_divmod(
    std::vector<Rational> a, const std::vector<Rational>& b) {
  dense_trim(a);
  std::vector<Rational> q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (size_t k = a.size(); k > 0;) {
    --k;
    if (k + 1 < b.size()) break;
    Rational f = a[k] / lead;
    if (!f.is_zero()) {
      const size_t shift = k + 1 - b.size();
      q[shift] = f;
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    }
  }
  dense_trim(a);
  return {q, a};
}

std::vector<Rational> dense_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  dense_trim(a);
  dense_trim(b);
  while (!b.empty()) {
    auto [q, r] = dense_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> poly_divmod_univariate(const MultiPoly& a, const MultiPoly& b, size_t var) {
  if (b.is_zero()) throw DomainError("univariate division by zero polynomial");
  auto da = dense_univariate(a, var);
  auto db = dense_univariate(b, var);
  dense_trim(db);
  auto [q, r] = dense_divmod(std::move(da), db);
  return {poly_from_dense(a.ring(), var, q), poly_from_dense(a.ring(), var, r)};
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, size_t var) {
  auto g = dense_gcd(dense_univariate(a, var), dense_univariate(b, var));
  return poly_from_dense(a.ring(), var, g);
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (!(num_.ring() == den_.ring() || num_.ring()->same_vars(*den_.ring()))) {
    RingPtr target = merged_ring(num_.ring(), den_.ring());
    num_ = num_.mapped_to(target);
    den_ = den_.mapped_to(target);
  }
  normalise();
}

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.ring(), Rational(1))) {}

RationalFunction RationalFunction::constant(RingPtr ring, const Rational& c) {
  return RationalFunction(MultiPoly::constant(std::move(ring), c));
}

void RationalFunction::normalise() {
  // If numerator and denominator involve at most one common variable, reduce
  // fully by the univariate gcd.
  std::optional<size_t> used;
  bool at_most_one = true;
  const size_t arity = num_.ring()->arity();
  for (size_t i = 0; i < arity && at_most_one; ++i) {
    if (num_.uses_var(i) || den_.uses_var(i)) {
      if (used && *used != i) at_most_one = false;
      used = i;
    }
  }
  if (at_most_one && used && !num_.is_zero()) {
    MultiPoly g = univariate_gcd(num_, den_, *used);
    if (g.degree_in(*used) > 0) {
      num_ = poly_divmod_univariate(num_, g, *used).first;
      den_ = poly_divmod_univariate(den_, g, *used).first;
    }
  }
  if (num_.is_zero()) den_ = MultiPoly::constant(den_.ring(), Rational(1));
  const Rational lead = den_.leading_term(MonomialOrder::GrLex)->coeff;
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw DomainError("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RationalFunction RationalFunction::derivative(const std::string& var) const {
  auto idx = num_.ring()->index_of(var);
  if (!idx) throw DomainError("unknown variable: " + var);
  MultiPoly n = num_.derivative(*idx) * den_ - num_ * den_.derivative(*idx);
  return RationalFunction(std::move(n), den_ * den_);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
  return num_.eval(point) / d;
}

TruncatedSeries RationalFunction::series_expand(const std::string& var, int order) const {
  auto idx = num_.ring()->index_of(var);
  if (!idx) throw DomainError("unknown variable: " + var);
  auto n = dense_univariate(num_, *idx);
  auto d = dense_univariate(den_, *idx);
  // Truncating numerator and denominator first still yields the exact first
  // `order` coefficients of the quotient.
  auto ns = TruncatedSeries::from_coeffs(var, order,
      std::vector<Rational>(n.begin(), n.begin() + std::min<size_t>(n.size(), order)));
  auto ds = TruncatedSeries::from_coeffs(var, order,
      std::vector<Rational>(d.begin(), d.begin() + std::min<size_t>(d.size(), order)));
  return ns / ds;
}

std::string RationalFunction::str() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace flagcurves
