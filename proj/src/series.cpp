#include "flagcurves/series.hpp"

#include "flagcurves/errors.hpp"

namespace flagcurves {

const char* elem_fn_name(ElemFn fn) {
  switch (fn) {
    case ElemFn::Exp: return "exp";
    case ElemFn::Sin: return "sin";
    case ElemFn::Cos: return "cos";
    case ElemFn::Sinh: return "sinh";
    case ElemFn::Cosh: return "cosh";
    case ElemFn::Tan: return "tan";
    case ElemFn::Tanh: return "tanh";
  }
  return "?";
}

TruncatedSeries::TruncatedSeries(std::string var, int order)
    : var_(std::move(var)), order_(order) {
  if (order_ < 1) throw DomainError("series order must be >= 1");
  c_.assign(static_cast<size_t>(order_), Rational(0));
}

TruncatedSeries TruncatedSeries::from_coeffs(std::string var, int order, std::vector<Rational> coeffs) {
  TruncatedSeries s(std::move(var), order);
  if (coeffs.size() > static_cast<size_t>(order))
    throw DomainError("more coefficients than the series order admits");
  for (size_t i = 0; i < coeffs.size(); ++i) s.c_[i] = std::move(coeffs[i]);
  return s;
}

TruncatedSeries TruncatedSeries::constant(std::string var, int order, const Rational& c) {
  TruncatedSeries s(std::move(var), order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::string var, int order) {
  TruncatedSeries s(std::move(var), order);
  if (order < 2) throw DomainError("series order too small for x");
  s.c_[1] = Rational(1);
  return s;
}

const Rational& TruncatedSeries::coeff(int k) const {
  if (k < 0 || k >= order_) throw DomainError("series coefficient index out of range");
  return c_[static_cast<size_t>(k)];
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

void TruncatedSeries::check_same(const TruncatedSeries& o) const {
  if (var_ != o.var_) throw DomainError("series variable mismatch");
  if (order_ != o.order_) throw DomainError("series order mismatch");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(var_, order_);
  for (int k = 0; k < order_; ++k) out.c_[k] = -c_[k];
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same(b);
  TruncatedSeries out(a.var_, a.order_);
  for (int k = 0; k < a.order_; ++k) out.c_[k] = a.c_[k] + b.c_[k];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same(b);
  TruncatedSeries out(a.var_, a.order_);
  for (int k = 0; k < a.order_; ++k) out.c_[k] = a.c_[k] - b.c_[k];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same(b);
  TruncatedSeries out(a.var_, a.order_);
  for (int i = 0; i < a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < a.order_; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries s) {
  for (auto& x : s.c_) x *= c;
  return s;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same(b);
  if (b.c_[0].is_zero()) throw DomainError("series division needs an invertible constant term");
  TruncatedSeries q(a.var_, a.order_);
  for (int k = 0; k < a.order_; ++k) {
    Rational acc = a.c_[k];
    for (int i = 0; i < k; ++i) acc -= q.c_[i] * b.c_[k - i];
    q.c_[k] = acc / b.c_[0];
  }
  return q;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return var_ == o.var_ && order_ == o.order_ && c_ == o.c_;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (order_ != inner.order_) throw DomainError("series order mismatch in composition");
  if (!inner.c_[0].is_zero())
    throw DomainError("series composition needs a vanishing inner constant term");
  // Horner in the inner series.
  TruncatedSeries result = TruncatedSeries::constant(inner.var_, order_, c_[order_ - 1]);
  for (int k = order_ - 2; k >= 0; --k) {
    result = result * inner;
    result.c_[0] += c_[k];
  }
  return result;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order_ < 2) throw DomainError("series order too small to differentiate");
  TruncatedSeries out(var_, order_ - 1);
  for (int k = 1; k < order_; ++k) out.c_[k - 1] = Rational(k) * c_[k];
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw DomainError("cannot extend a truncated series");
  TruncatedSeries out(var_, order);
  for (int k = 0; k < order; ++k) out.c_[k] = c_[k];
  return out;
}

TruncatedSeries TruncatedSeries::elementary(ElemFn fn, const Rational& scale, std::string var, int order) {
  switch (fn) {
    case ElemFn::Tan: {
      TruncatedSeries num = elementary(ElemFn::Sin, scale, var, order);
      return num / elementary(ElemFn::Cos, scale, std::move(var), order);
    }
    case ElemFn::Tanh: {
      TruncatedSeries num = elementary(ElemFn::Sinh, scale, var, order);
      return num / elementary(ElemFn::Cosh, scale, std::move(var), order);
    }
    default:
      break;
  }
  TruncatedSeries s(std::move(var), order);
  // c_k = scale^k / k! with the usual parity/sign pattern per function.
  Rational term(1);  // scale^k / k!
  for (int k = 0; k < order; ++k) {
    if (k > 0) term = term * scale / Rational(k);
    switch (fn) {
      case ElemFn::Exp:
        s.c_[k] = term;
        break;
      case ElemFn::Sin:
        if (k % 2 == 1) s.c_[k] = (k % 4 == 1) ? term : -term;
        break;
      case ElemFn::Cos:
        if (k % 2 == 0) s.c_[k] = (k % 4 == 0) ? term : -term;
        break;
      case ElemFn::Sinh:
        if (k % 2 == 1) s.c_[k] = term;
        break;
      case ElemFn::Cosh:
        if (k % 2 == 0) s.c_[k] = term;
        break;
      default:
        break;
    }
  }
  return s;
}

std::string TruncatedSeries::str() const {
  std::string out;
  bool first = true;
  for (int k = 0; k < order_; ++k) {
    if (c_[k].is_zero()) continue;
    Rational mag = c_[k].abs();
    if (first) {
      if (c_[k].is_negative()) out += '-';
      first = false;
    } else {
      out += c_[k].is_negative() ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
    } else {
      if (!mag.is_one()) {
        out += mag.str();
        out += '*';
      }
      out += var_;
      if (k > 1) {
        out += '^';
        out += std::to_string(k);
      }
    }
  }
  if (first) out = "0";
  out += " + O(" + var_ + "^" + std::to_string(order_) + ")";
  return out;
}

}  // namespace flagcurves
