#include "flagcurves/multipoly.hpp"

#include <algorithm>
#include <cctype>

#include "flagcurves/errors.hpp"

namespace flagcurves {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw DomainError("empty variable name");
    if (!index_.emplace(vars_[i], i).second)
      throw DomainError("duplicate variable name: " + vars_[i]);
  }
}

RingPtr PolyRing::make(std::vector<std::string> vars) {
  return RingPtr(new PolyRing(std::move(vars)));
}

std::optional<size_t> PolyRing::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RingPtr merged_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b || a->same_vars(*b)) return a;
  std::vector<std::string> vars = a->vars();
  for (const auto& v : b->vars())
    if (!a->index_of(v)) vars.push_back(v);
  return PolyRing::make(std::move(vars));
}

const char* order_name(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::GrLex: return "graded-lex";
    case MonomialOrder::GrevLex: return "graded-reverse-lex";
    case MonomialOrder::Lex: return "lex";
  }
  return "?";
}

std::optional<MonomialOrder> order_from_name(std::string_view name) {
  if (name == "graded-lex") return MonomialOrder::GrLex;
  if (name == "graded-reverse-lex") return MonomialOrder::GrevLex;
  if (name == "lex") return MonomialOrder::Lex;
  return std::nullopt;
}

uint64_t exponent_degree(const Exponents& e) {
  uint64_t d = 0;
  for (uint32_t x : e) d += x;
  return d;
}

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
  if (a.size() != b.size()) throw DomainError("monomial arity mismatch");
  switch (order) {
    case MonomialOrder::Lex:
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::GrLex: {
      uint64_t da = exponent_degree(a), db = exponent_degree(b);
      if (da != db) return da > db ? 1 : -1;
      return compare_monomials(a, b, MonomialOrder::Lex);
    }
    case MonomialOrder::GrevLex: {
      uint64_t da = exponent_degree(a), db = exponent_degree(b);
      if (da != db) return da > db ? 1 : -1;
      for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) throw DomainError("monomial arity mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents monomial_quotient(const Exponents& b, const Exponents& a) {
  Exponents q(b.size());
  for (size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i]) throw DomainError("monomial does not divide");
    q[i] = b[i] - a[i];
  }
  return q;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

namespace {

bool term_before(const Term& a, const Term& b) {
  return compare_monomials(a.exp, b.exp, MonomialOrder::GrLex) > 0;
}

}  // namespace

MultiPoly MultiPoly::from_accumulator(RingPtr ring, std::map<Exponents, Rational>& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) terms.push_back(Term{e, c});
  std::sort(terms.begin(), terms.end(), term_before);
  return MultiPoly(std::move(ring), std::move(terms));
}

MultiPoly MultiPoly::zero(RingPtr ring) { return MultiPoly(std::move(ring), {}); }

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  if (c.is_zero()) return zero(std::move(ring));
  Exponents e(ring->arity(), 0);
  return MultiPoly(std::move(ring), {Term{std::move(e), c}});
}

MultiPoly MultiPoly::variable(RingPtr ring, size_t index) {
  if (index >= ring->arity()) throw DomainError("variable index out of range");
  Exponents e(ring->arity(), 0);
  e[index] = 1;
  return MultiPoly(std::move(ring), {Term{std::move(e), Rational(1)}});
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw DomainError("unknown variable: " + std::string(name));
  return variable(std::move(ring), *idx);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents exp, const Rational& c) {
  if (exp.size() != ring->arity()) throw DomainError("monomial arity mismatch");
  if (c.is_zero()) return zero(std::move(ring));
  return MultiPoly(std::move(ring), {Term{std::move(exp), c}});
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_[0].exp) == 0);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_[0].coeff;
}

uint32_t MultiPoly::degree_in(size_t var) const {
  if (ring_ && var >= ring_->arity()) throw DomainError("variable index out of range");
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

uint64_t MultiPoly::total_degree() const {
  uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, exponent_degree(t.exp));
  return d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!ring_ || !o.ring_) throw DomainError("operation on detached polynomial");
}

MultiPoly MultiPoly::operator-() const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coeff = -t.coeff;
  return MultiPoly(ring_, std::move(terms));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(ring_);
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coeff *= c;
  return MultiPoly(ring_, std::move(terms));
}

namespace {

// Merge two sorted term lists (descending GrLex) with +/- combination.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = compare_monomials(a[i].exp, b[j].exp, MonomialOrder::GrLex);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Term t = b[j++];
      if (subtract) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      Rational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  if (a.ring_ == b.ring_ || a.ring_->same_vars(*b.ring_))
    return MultiPoly(a.ring_, merge_terms(a.terms_, b.terms_, false));
  RingPtr target = merged_ring(a.ring(), b.ring());
  return a.mapped_to(target) + b.mapped_to(target);
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  if (a.ring_ == b.ring_ || a.ring_->same_vars(*b.ring_))
    return MultiPoly(a.ring_, merge_terms(a.terms_, b.terms_, true));
  RingPtr target = merged_ring(a.ring(), b.ring());
  return a.mapped_to(target) - b.mapped_to(target);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) { return *this = *this + o; }
MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this = *this - o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  if (!(a.ring_ == b.ring_ || a.ring_->same_vars(*b.ring_))) {
    RingPtr target = merged_ring(a.ring(), b.ring());
    return a.mapped_to(target) * b.mapped_to(target);
  }
  std::map<Exponents, Rational> acc;
  const size_t arity = a.ring_->arity();
  Exponents e(arity);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (size_t k = 0; k < arity; ++k) e[k] = ta.exp[k] + tb.exp[k];
      acc[e] += ta.coeff * tb.coeff;
    }
  }
  return MultiPoly::from_accumulator(a.ring_, acc);
}

MultiPoly MultiPoly::pow(uint32_t k) const {
  if (!ring_) throw DomainError("operation on detached polynomial");
  MultiPoly result = constant(ring_, Rational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    if (k >>= 1) base = base * base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (ring_ == o.ring_ || (ring_ && o.ring_ && ring_->same_vars(*o.ring_))) {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
  }
  if (!ring_ || !o.ring_) return false;
  return (*this - o).is_zero();
}

const Term* MultiPoly::leading_term(MonomialOrder order) const {
  if (terms_.empty()) return nullptr;
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (compare_monomials(t.exp, best->exp, order) > 0) best = &t;
  return best;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(size_t var) const {
  if (!ring_) throw DomainError("operation on detached polynomial");
  uint32_t d = degree_in(var);
  std::vector<std::map<Exponents, Rational>> buckets(d + 1);
  for (const auto& t : terms_) {
    Exponents e = t.exp;
    uint32_t k = e[var];
    e[var] = 0;
    buckets[k][std::move(e)] += t.coeff;
  }
  std::vector<MultiPoly> out;
  out.reserve(d + 1);
  for (auto& bucket : buckets) out.push_back(from_accumulator(ring_, bucket));
  return out;
}

MultiPoly MultiPoly::derivative(size_t var) const {
  if (!ring_) throw DomainError("operation on detached polynomial");
  if (var >= ring_->arity()) throw DomainError("variable index out of range");
  std::map<Exponents, Rational> acc;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Exponents e = t.exp;
    Rational c = t.coeff * Rational(static_cast<long long>(e[var]));
    e[var] -= 1;
    acc[std::move(e)] += c;
  }
  return from_accumulator(ring_, acc);
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& subs) const {
  if (!ring_) throw DomainError("operation on detached polynomial");
  RingPtr target = ring_;
  for (const auto& [name, value] : subs) {
    if (!value.ring()) throw DomainError("detached replacement for " + name);
    target = merged_ring(target, value.ring());
  }
  // Per-variable replacement expressed over the target ring.
  std::vector<MultiPoly> repl(ring_->arity());
  std::vector<std::vector<MultiPoly>> powers(ring_->arity());
  for (size_t i = 0; i < ring_->arity(); ++i) {
    auto it = subs.find(ring_->var(i));
    repl[i] = (it != subs.end()) ? it->second.mapped_to(target)
                                 : MultiPoly::variable(target, ring_->var(i));
    powers[i] = {MultiPoly::constant(target, Rational(1))};
  }
  auto power_of = [&](size_t i, uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    while (cache.size() <= k) cache.push_back(cache.back() * repl[i]);
    return cache[k];
  };
  MultiPoly result = MultiPoly::zero(target);
  for (const auto& t : terms_) {
    MultiPoly prod = MultiPoly::constant(target, t.coeff);
    for (size_t i = 0; i < ring_->arity(); ++i)
      if (t.exp[i] > 0) prod = prod * power_of(i, t.exp[i]);
    result += prod;
  }
  return result;
}

MultiPoly MultiPoly::substitute_values(const std::map<std::string, Rational>& subs) const {
  if (!ring_) throw DomainError("operation on detached polynomial");
  std::map<Exponents, Rational> acc;
  for (const auto& t : terms_) {
    Exponents e = t.exp;
    Rational c = t.coeff;
    for (size_t i = 0; i < ring_->arity(); ++i) {
      if (e[i] == 0) continue;
      auto it = subs.find(ring_->var(i));
      if (it == subs.end()) continue;
      c *= it->second.pow(e[i]);
      e[i] = 0;
    }
    if (!c.is_zero()) acc[std::move(e)] += c;
  }
  return from_accumulator(ring_, acc);
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
  if (!ring_) throw DomainError("operation on detached polynomial");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    for (size_t i = 0; i < ring_->arity(); ++i) {
      if (t.exp[i] == 0) continue;
      auto it = point.find(ring_->var(i));
      if (it == point.end())
        throw DomainError("evaluation is missing variable " + ring_->var(i));
      c *= it->second.pow(t.exp[i]);
    }
    sum += c;
  }
  return sum;
}

MultiPoly MultiPoly::mapped_to(const RingPtr& target) const {
  if (!ring_) throw DomainError("operation on detached polynomial");
  if (target == ring_ || target->same_vars(*ring_)) return MultiPoly(target, terms_);
  // Variable index translation; unused source variables may be dropped.
  std::vector<std::optional<size_t>> where(ring_->arity());
  for (size_t i = 0; i < ring_->arity(); ++i) where[i] = target->index_of(ring_->var(i));
  std::map<Exponents, Rational> acc;
  for (const auto& t : terms_) {
    Exponents e(target->arity(), 0);
    for (size_t i = 0; i < ring_->arity(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!where[i])
        throw DomainError("target ring lacks used variable " + ring_->var(i));
      e[*where[i]] += t.exp[i];
    }
    acc[std::move(e)] += t.coeff;
  }
  return from_accumulator(target, acc);
}

namespace {

struct PolyScanner {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin) throw ParseError("expected number in polynomial at offset " + std::to_string(pos));
    std::string s(text.substr(begin, pos - begin));
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t den_begin = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == den_begin) throw ParseError("expected denominator in polynomial at offset " + std::to_string(pos));
      s += '/';
      s += text.substr(den_begin, pos - den_begin);
    }
    return s;
  }
  std::string symbol() {
    skip_ws();
    size_t begin = pos;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos < text.size() && head(text[pos])) {
      ++pos;
      while (pos < text.size() && tail(text[pos])) ++pos;
    }
    if (pos == begin) throw ParseError("expected symbol in polynomial at offset " + std::to_string(pos));
    return std::string(text.substr(begin, pos - begin));
  }
  uint32_t exponent() {
    skip_ws();
    size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin) throw ParseError("expected exponent in polynomial at offset " + std::to_string(pos));
    unsigned long v = std::stoul(std::string(text.substr(begin, pos - begin)));
    return static_cast<uint32_t>(v);
  }
};

}  // namespace

MultiPoly MultiPoly::parse(RingPtr ring, std::string_view text) {
  PolyScanner sc{text};
  if (sc.done()) throw ParseError("empty polynomial");
  std::map<Exponents, Rational> acc;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (sc.accept('+')) {
      if (first) throw ParseError("polynomial may not start with '+'");
    } else if (!first) {
      throw ParseError("expected '+' or '-' between polynomial terms");
    }
    first = false;
    // One term: '*'-separated factors, each a number or symbol[^k].
    Rational coeff(sign);
    Exponents exp(ring->arity(), 0);
    bool expect_factor = true;
    while (expect_factor) {
      if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        coeff *= Rational::parse(sc.number());
      } else {
        std::string name = sc.symbol();
        auto idx = ring->index_of(name);
        if (!idx) throw ParseError("unknown symbol in polynomial: " + name);
        uint32_t k = 1;
        if (sc.accept('^')) k = sc.exponent();
        exp[*idx] += k;
      }
      expect_factor = sc.accept('*');
    }
    if (!coeff.is_zero()) acc[std::move(exp)] += coeff;
  }
  return from_accumulator(std::move(ring), acc);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = t.coeff.abs();
    if (first) {
      if (t.coeff.is_negative()) out += '-';
      first = false;
    } else {
      out += t.coeff.is_negative() ? " - " : " + ";
    }
    std::string factors;
    for (size_t i = 0; i < ring_->arity(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += ring_->var(i);
      if (t.exp[i] > 1) {
        factors += '^';
        factors += std::to_string(t.exp[i]);
      }
    }
    if (factors.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += factors;
    } else {
      out += mag.str();
      out += '*';
      out += factors;
    }
  }
  return out;
}

bool proportional(const MultiPoly& a, const MultiPoly& b, Rational* factor) {
  if (a.is_zero() && b.is_zero()) {
    if (factor) *factor = Rational(1);
    return true;
  }
  if (a.is_zero() || b.is_zero()) return false;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (!(a.ring() == b.ring() || a.ring()->same_vars(*b.ring()))) {
    RingPtr target = merged_ring(a.ring(), b.ring());
    return proportional(a.mapped_to(target), b.mapped_to(target), factor);
  }
  if (ta.size() != tb.size()) return false;
  Rational c = ta[0].coeff / tb[0].coeff;
  for (size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].exp != tb[i].exp) return false;
    if (ta[i].coeff != c * tb[i].coeff) return false;
  }
  if (factor) *factor = c;
  return true;
}

}  // namespace flagcurves
