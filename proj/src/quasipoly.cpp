#include "flagcurves/quasipoly.hpp"

#include <cctype>
#include <tuple>
#include <utility>
#include <vector>

#include "flagcurves/errors.hpp"

namespace flagcurves {

namespace {

int kind_rank(TrigKind k) { return k == TrigKind::One ? 0 : k == TrigKind::Cos ? 1 : 2; }

}  // namespace

bool QuasiKey::operator==(const QuasiKey& o) const {
  return power == o.power && exp_rate == o.exp_rate && trig_rate == o.trig_rate &&
         kind == o.kind;
}

bool QuasiKey::operator<(const QuasiKey& o) const {
  if (power != o.power) return power < o.power;
  if (exp_rate != o.exp_rate) return exp_rate < o.exp_rate;
  if (trig_rate != o.trig_rate) return trig_rate < o.trig_rate;
  return kind_rank(kind) < kind_rank(o.kind);
}

void QuasiPoly::add_term(QuasiKey key, Rational coeff) {
  if (coeff.is_zero()) return;
  if (key.kind == TrigKind::One) {
    key.trig_rate = Rational(0);
  } else if (key.trig_rate.is_zero()) {
    if (key.kind == TrigKind::Sin) return;  // sin(0) = 0
    key.kind = TrigKind::One;               // cos(0) = 1
  } else if (key.trig_rate.is_negative()) {
    key.trig_rate = -key.trig_rate;
    if (key.kind == TrigKind::Sin) coeff = -coeff;  // sin is odd, cos even
  }
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(std::move(key), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) t_.erase(it);
  }
}

QuasiPoly QuasiPoly::constant(const Rational& c) {
  QuasiPoly p;
  p.add_term(QuasiKey{}, c);
  return p;
}

QuasiPoly QuasiPoly::monomial(const Rational& coeff, uint32_t power, const Rational& exp_rate,
                              const Rational& trig_rate, TrigKind kind) {
  QuasiPoly p;
  p.add_term(QuasiKey{power, exp_rate, trig_rate, kind}, coeff);
  return p;
}

QuasiPoly QuasiPoly::operator-() const {
  QuasiPoly out;
  for (const auto& [k, c] : t_) out.t_.emplace(k, -c);
  return out;
}

QuasiPoly& QuasiPoly::operator+=(const QuasiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

QuasiPoly& QuasiPoly::operator-=(const QuasiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

QuasiPoly operator+(const QuasiPoly& a, const QuasiPoly& b) {
  QuasiPoly out = a;
  out += b;
  return out;
}

QuasiPoly operator-(const QuasiPoly& a, const QuasiPoly& b) {
  QuasiPoly out = a;
  out -= b;
  return out;
}

QuasiPoly operator*(const Rational& c, const QuasiPoly& p) {
  QuasiPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : p.t_) out.t_.emplace(k, c * v);
  return out;
}

QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b) {
  QuasiPoly out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      const uint32_t power = ka.power + kb.power;
      const Rational exp_rate = ka.exp_rate + kb.exp_rate;
      const Rational coeff = ca * cb;
      const Rational &b1 = ka.trig_rate, &b2 = kb.trig_rate;
      const Rational half(1, 2);
      // Product-to-sum on the trigonometric parts.
      if (ka.kind == TrigKind::One) {
        out.add_term(QuasiKey{power, exp_rate, b2, kb.kind}, coeff);
      } else if (kb.kind == TrigKind::One) {
        out.add_term(QuasiKey{power, exp_rate, b1, ka.kind}, coeff);
      } else if (ka.kind == TrigKind::Cos && kb.kind == TrigKind::Cos) {
        out.add_term(QuasiKey{power, exp_rate, b1 - b2, TrigKind::Cos}, coeff * half);
        out.add_term(QuasiKey{power, exp_rate, b1 + b2, TrigKind::Cos}, coeff * half);
      } else if (ka.kind == TrigKind::Sin && kb.kind == TrigKind::Sin) {
        out.add_term(QuasiKey{power, exp_rate, b1 - b2, TrigKind::Cos}, coeff * half);
        out.add_term(QuasiKey{power, exp_rate, b1 + b2, TrigKind::Cos}, -(coeff * half));
      } else if (ka.kind == TrigKind::Sin) {  // sin(b1) cos(b2)
        out.add_term(QuasiKey{power, exp_rate, b1 + b2, TrigKind::Sin}, coeff * half);
        out.add_term(QuasiKey{power, exp_rate, b1 - b2, TrigKind::Sin}, coeff * half);
      } else {  // cos(b1) sin(b2)
        out.add_term(QuasiKey{power, exp_rate, b1 + b2, TrigKind::Sin}, coeff * half);
        out.add_term(QuasiKey{power, exp_rate, b2 - b1, TrigKind::Sin}, coeff * half);
      }
    }
  return out;
}

QuasiPoly QuasiPoly::derivative() const {
  QuasiPoly out;
  for (const auto& [k, c] : t_) {
    if (k.power > 0)
      out.add_term(QuasiKey{k.power - 1, k.exp_rate, k.trig_rate, k.kind},
                   c * Rational(static_cast<long long>(k.power)));
    if (!k.exp_rate.is_zero())
      out.add_term(QuasiKey{k.power, k.exp_rate, k.trig_rate, k.kind}, c * k.exp_rate);
    if (k.kind == TrigKind::Cos)
      out.add_term(QuasiKey{k.power, k.exp_rate, k.trig_rate, TrigKind::Sin}, -(c * k.trig_rate));
    else if (k.kind == TrigKind::Sin)
      out.add_term(QuasiKey{k.power, k.exp_rate, k.trig_rate, TrigKind::Cos}, c * k.trig_rate);
  }
  return out;
}

TruncatedSeries QuasiPoly::to_series(std::string var, int order) const {
  TruncatedSeries sum(var, order);
  for (const auto& [k, c] : t_) {
    if (k.power >= static_cast<uint32_t>(order)) continue;
    std::vector<Rational> mono(static_cast<size_t>(order), Rational(0));
    mono[k.power] = c;
    TruncatedSeries term = TruncatedSeries::from_coeffs(var, order, std::move(mono));
    if (!k.exp_rate.is_zero())
      term = term * TruncatedSeries::elementary(ElemFn::Exp, k.exp_rate, var, order);
    if (k.kind == TrigKind::Cos)
      term = term * TruncatedSeries::elementary(ElemFn::Cos, k.trig_rate, var, order);
    else if (k.kind == TrigKind::Sin)
      term = term * TruncatedSeries::elementary(ElemFn::Sin, k.trig_rate, var, order);
    sum = sum + term;
  }
  return sum;
}

namespace {

std::string rate_factor(const char* fn, const Rational& rate) {
  std::string out = fn;
  out += '(';
  if (rate == Rational(-1)) {
    out += '-';
  } else if (!(rate.is_one())) {
    out += rate.str();
    out += '*';
  }
  out += "x)";
  return out;
}

}  // namespace

std::string QuasiPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t_) {
    const Rational mag = c.abs();
    if (first) {
      if (c.is_negative()) out += '-';
      first = false;
    } else {
      out += c.is_negative() ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (k.power == 1)
      factors.push_back("x");
    else if (k.power > 1)
      factors.push_back("x^" + std::to_string(k.power));
    if (!k.exp_rate.is_zero()) factors.push_back(rate_factor("exp", k.exp_rate));
    if (k.kind == TrigKind::Cos) factors.push_back(rate_factor("cos", k.trig_rate));
    if (k.kind == TrigKind::Sin) factors.push_back(rate_factor("sin", k.trig_rate));
    std::string term;
    if (!mag.is_one() || factors.empty()) term = mag.str();
    for (const auto& f : factors) {
      if (!term.empty()) term += '*';
      term += f;
    }
    out += term;
  }
  return out;
}

namespace {

// Recursive-descent scanner for the vector-field coefficient grammar.
class QuasiScanner {
 public:
  explicit QuasiScanner(const std::string& text) : s_(text) {}

  QuasiPoly parse() {
    QuasiPoly total;
    skip_ws();
    if (done()) throw ParseError("empty quasi-polynomial");
    bool negative = take_sign();
    for (;;) {
      QuasiPoly term = parse_term();
      total += negative ? -term : term;
      skip_ws();
      if (done()) break;
      if (s_[pos_] == '+') {
        negative = false;
      } else if (s_[pos_] == '-') {
        negative = true;
      } else {
        throw ParseError("expected '+' or '-' at position " + std::to_string(pos_));
      }
      ++pos_;
      skip_ws();
    }
    return total;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool take_sign() {
    if (!done() && s_[pos_] == '-') {
      ++pos_;
      skip_ws();
      return true;
    }
    if (!done() && s_[pos_] == '+') {
      ++pos_;
      skip_ws();
    }
    return false;
  }

  QuasiPoly parse_term() {
    QuasiPoly prod = QuasiPoly::constant(Rational(1));
    bool expect_factor = true;
    while (expect_factor) {
      prod = prod * parse_factor();
      skip_ws();
      if (!done() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        continue;
      }
      // Juxtaposition is allowed only via explicit '*'; stop otherwise.
      expect_factor = false;
    }
    return prod;
  }

  QuasiPoly parse_factor() {
    skip_ws();
    if (done()) throw ParseError("expected a factor at end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return QuasiPoly::constant(parse_rational());
    if (c == 'x') {
      ++pos_;
      uint32_t k = 1;
      if (!done() && s_[pos_] == '^') {
        ++pos_;
        k = parse_power();
      }
      return QuasiPoly::monomial(Rational(1), k);
    }
    std::string name = parse_name();
    skip_ws();
    if (done() || s_[pos_] != '(')
      throw ParseError("expected '(' after '" + name + "'");
    ++pos_;
    Rational rate = parse_rate();
    skip_ws();
    if (done() || s_[pos_] != ')')
      throw ParseError("expected ')' closing '" + name + "'");
    ++pos_;
    const Rational half(1, 2);
    if (name == "exp") return QuasiPoly::monomial(Rational(1), 0, rate);
    if (name == "sin") return QuasiPoly::monomial(Rational(1), 0, Rational(0), rate, TrigKind::Sin);
    if (name == "cos") return QuasiPoly::monomial(Rational(1), 0, Rational(0), rate, TrigKind::Cos);
    if (name == "sinh")
      return QuasiPoly::monomial(half, 0, rate) + QuasiPoly::monomial(-half, 0, -rate);
    if (name == "cosh")
      return QuasiPoly::monomial(half, 0, rate) + QuasiPoly::monomial(half, 0, -rate);
    throw ParseError("unknown function '" + name + "'");
  }

  // Rate inside exp/sin/cos/sinh/cosh parentheses: [sign] [rational ['*']] x
  Rational parse_rate() {
    skip_ws();
    bool negative = take_sign();
    Rational mag(1);
    skip_ws();
    if (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      mag = parse_rational();
      skip_ws();
      if (!done() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      }
    }
    if (done() || s_[pos_] != 'x') throw ParseError("expected 'x' in rate");
    ++pos_;
    return negative ? -mag : mag;
  }

  Rational parse_rational() {
    size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number at position " + std::to_string(pos_));
    std::string text = s_.substr(start, pos_ - start);
    if (!done() && s_[pos_] == '/') {
      ++pos_;
      size_t dstart = pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) throw ParseError("expected a denominator");
      text += '/';
      text += s_.substr(dstart, pos_ - dstart);
    }
    return Rational::parse(text);
  }

  uint32_t parse_power() {
    size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an exponent");
    return static_cast<uint32_t>(std::stoul(s_.substr(start, pos_ - start)));
  }

  std::string parse_name() {
    size_t start = pos_;
    while (!done() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_)
      throw ParseError("unexpected character at position " + std::to_string(pos_));
    return s_.substr(start, pos_ - start);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

QuasiPoly QuasiPoly::parse(const std::string& text) { return QuasiScanner(text).parse(); }

}  // namespace flagcurves
