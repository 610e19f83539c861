#include "flagcurves/matrices.hpp"

#include <numeric>

#include "flagcurves/errors.hpp"

namespace flagcurves {

FlagContext::FlagContext(int n_in, std::vector<int> blocks_in)
    : n(n_in), blocks(std::move(blocks_in)) {
  if (n < 1) throw DomainError("matrix size must be positive");
  int sum = 0;
  for (int b : blocks) {
    if (b < 1) throw DomainError("block sizes must be positive");
    sum += b;
  }
  if (sum != n) throw DomainError("block sizes must sum to the matrix size");
  block_of.reserve(n);
  for (size_t k = 0; k < blocks.size(); ++k)
    for (int i = 0; i < blocks[k]; ++i) block_of.push_back(static_cast<int>(k));
}

FlagContext FlagContext::borel(int n) {
  return FlagContext(n, std::vector<int>(static_cast<size_t>(n), 1));
}

bool FlagContext::is_borel() const {
  for (int b : blocks)
    if (b != 1) return false;
  return true;
}

std::vector<std::pair<int, int>> FlagContext::below_positions() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (below(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> FlagContext::above_positions() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (above(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> FlagContext::diag_positions() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (diag(i, j)) out.emplace_back(i, j);
  return out;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::basis(int n, int i, int j) {
  RatMatrix m(n);
  m.at(i, j) = Rational(1);
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Rational RatMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

void RatMatrix::check_same(const RatMatrix& o) const {
  if (n_ != o.n_) throw DomainError("matrix size mismatch");
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix out(n_);
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  a.check_same(b);
  RatMatrix out(a.n_);
  for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  a.check_same(b);
  RatMatrix out(a.n_);
  for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  a.check_same(b);
  RatMatrix out(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return out;
}

RatMatrix operator*(const Rational& c, RatMatrix m) {
  for (auto& x : m.e_) x *= c;
  return m;
}

Rational RatMatrix::det() const {
  // Fraction-free is unnecessary at this scale: straight Gaussian elimination
  // over the exact field.
  RatMatrix a = *this;
  Rational d(1);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row)
      if (!a.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    Rational inv = a.at(col, col).inverse();
    for (int row = col + 1; row < n_; ++row) {
      if (a.at(row, col).is_zero()) continue;
      Rational f = a.at(row, col) * inv;
      for (int j = col; j < n_; ++j) a.at(row, j) -= f * a.at(col, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  // Gauss-Jordan against the identity.
  RatMatrix a = *this;
  RatMatrix inv = RatMatrix::identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row)
      if (!a.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw DomainError("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational f = a.at(col, col).inverse();
    for (int j = 0; j < n_; ++j) {
      a.at(col, j) *= f;
      inv.at(col, j) *= f;
    }
    for (int row = 0; row < n_; ++row) {
      if (row == col || a.at(row, col).is_zero()) continue;
      Rational g = a.at(row, col);
      for (int j = 0; j < n_; ++j) {
        a.at(row, j) -= g * a.at(col, j);
        inv.at(row, j) -= g * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::string RatMatrix::str() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  out += "]";
  return out;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

PolyMatrix::PolyMatrix(RingPtr ring, int n) : ring_(std::move(ring)), n_(n) {
  if (n_ < 1) throw DomainError("matrix size must be positive");
  e_.assign(static_cast<size_t>(n_) * n_, MultiPoly::zero(ring_));
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
  PolyMatrix m(ring, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(ring, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::from_rational(const RingPtr& ring, const RatMatrix& m) {
  PolyMatrix out(ring, m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = MultiPoly::constant(ring, m.at(i, j));
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

void PolyMatrix::check_same(const PolyMatrix& o) const {
  if (n_ != o.n_) throw DomainError("matrix size mismatch");
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out(ring_, n_);
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  a.check_same(b);
  PolyMatrix out(a.ring_, a.n_);
  for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  a.check_same(b);
  PolyMatrix out(a.ring_, a.n_);
  for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  a.check_same(b);
  PolyMatrix out(a.ring_, a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return out;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& c) const {
  PolyMatrix out(ring_, n_);
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  if (n_ != o.n_) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (e_[k] != o.e_[k]) return false;
  return true;
}

MultiPoly PolyMatrix::det() const {
  // Cofactor expansion along the first row; fine for the small sizes used.
  if (n_ == 1) return at(0, 0);
  MultiPoly d = MultiPoly::zero(ring_);
  for (int j = 0; j < n_; ++j) {
    if (at(0, j).is_zero()) continue;
    PolyMatrix minor(ring_, n_ - 1);
    for (int r = 1; r < n_; ++r) {
      int cc = 0;
      for (int c = 0; c < n_; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = at(r, c);
      }
    }
    MultiPoly cof = at(0, j) * minor.det();
    if (j % 2 == 0)
      d += cof;
    else
      d -= cof;
  }
  return d;
}

PolyMatrix PolyMatrix::inverse_constant_det() const {
  MultiPoly d = det();
  if (!d.is_constant() || d.is_zero())
    throw DomainError("inverse requires a nonzero constant determinant");
  Rational inv = d.constant_value().inverse();
  if (n_ == 1) {
    PolyMatrix out(ring_, 1);
    out.at(0, 0) = MultiPoly::constant(ring_, inv);
    return out;
  }
  PolyMatrix adj(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      PolyMatrix minor(ring_, n_ - 1);
      int rr = 0;
      for (int r = 0; r < n_; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < n_; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = at(r, c);
        }
        ++rr;
      }
      MultiPoly cof = minor.det();
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof.scaled(inv);  // adjugate transposes
    }
  return adj;
}

PolyMatrix PolyMatrix::substitute_values(const std::map<std::string, Rational>& subs) const {
  PolyMatrix out(ring_, n_);
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].substitute_values(subs);
  return out;
}

RatMatrix PolyMatrix::eval(const std::map<std::string, Rational>& point) const {
  RatMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(i, j).eval(point);
  return out;
}

std::string PolyMatrix::str() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  out += "]";
  return out;
}

int nilpotency_index(const RatMatrix& x) {
  if (x.is_zero()) return 1;
  RatMatrix p = x;
  for (int k = 1; k <= x.n(); ++k) {
    if (p.is_zero()) return k;
    p = p * x;
  }
  throw NotNilpotentError("matrix is not nilpotent");
}

PolyMatrix exp_nilpotent(const RatMatrix& x, const MultiPoly& scalar) {
  int index = nilpotency_index(x);
  const RingPtr& ring = scalar.ring();
  PolyMatrix sum = PolyMatrix::identity(ring, x.n());
  RatMatrix xpow = RatMatrix::identity(x.n());
  MultiPoly spow = MultiPoly::constant(ring, Rational(1));
  Rational factorial(1);
  for (int j = 1; j < index; ++j) {
    xpow = xpow * x;
    spow = spow * scalar;
    factorial *= Rational(j);
    Rational inv = factorial.inverse();
    for (int i = 0; i < x.n(); ++i)
      for (int k = 0; k < x.n(); ++k)
        if (!xpow.at(i, k).is_zero())
          sum.at(i, k) += spow.scaled(xpow.at(i, k) * inv);
  }
  return sum;
}

PolyMatrix exp_nilpotent(const PolyMatrix& x, const MultiPoly& scalar, int bound) {
  PolyMatrix sum = PolyMatrix::identity(x.ring(), x.n());
  PolyMatrix xpow = x;      // x^j
  MultiPoly spow = scalar;  // scalar^j
  Rational factorial(1);    // j!
  int j = 1;
  while (!xpow.is_zero()) {
    if (j > bound) throw NotNilpotentError("matrix power did not vanish by the required bound");
    factorial *= Rational(j);
    Rational inv = factorial.inverse();
    for (int i = 0; i < x.n(); ++i)
      for (int k = 0; k < x.n(); ++k)
        if (!xpow.at(i, k).is_zero()) sum.at(i, k) += (xpow.at(i, k) * spow).scaled(inv);
    ++j;
    xpow = xpow * x;
    spow = spow * scalar;
  }
  return sum;
}

PolyMatrix exp_mobius_cleared(const PolyMatrix& y, const FlagContext& ctx, size_t t_var) {
  if (y.n() != ctx.n) throw DomainError("matrix size does not match the block structure");
  for (int i = 0; i < y.n(); ++i)
    for (int j = 0; j < y.n(); ++j)
      if (!ctx.below(i, j) && !y.at(i, j).is_zero())
        throw NilradicalPatternError("matrix is not supported on the below-block positions");
  const RingPtr& ring = y.ring();
  const int n = y.n();
  MultiPoly t = MultiPoly::variable(ring, t_var);
  MultiPoly t1 = t + MultiPoly::constant(ring, Rational(1));
  PolyMatrix sum(ring, n);
  PolyMatrix ypow = PolyMatrix::identity(ring, n);
  Rational factorial(1);
  for (int j = 0; j <= n - 1; ++j) {
    if (j > 0) {
      ypow = ypow * y;
      factorial *= Rational(j);
      if (ypow.is_zero()) break;
    }
    Rational c = factorial.inverse();
    if (j % 2 == 1) c = -c;
    MultiPoly weight = t.pow(static_cast<uint32_t>(j)) *
                       t1.pow(static_cast<uint32_t>(n - 1 - j));
    sum = sum + ypow.scaled(weight.scaled(c));
  }
  return sum;
}

RatMatrix adjoint(const RatMatrix& p, const RatMatrix& x) { return p * x * p.inverse(); }

PolyMatrix adjoint(const PolyMatrix& p, const PolyMatrix& x) {
  return p * x * p.inverse_constant_det();
}

std::vector<Rational> below_block_entries(const RatMatrix& m, const FlagContext& ctx) {
  if (m.n() != ctx.n) throw DomainError("matrix size does not match the block structure");
  std::vector<Rational> out;
  for (auto [i, j] : ctx.below_positions()) out.push_back(m.at(i, j));
  return out;
}

std::vector<MultiPoly> below_block_entries(const PolyMatrix& m, const FlagContext& ctx) {
  if (m.n() != ctx.n) throw DomainError("matrix size does not match the block structure");
  std::vector<MultiPoly> out;
  for (auto [i, j] : ctx.below_positions()) out.push_back(m.at(i, j));
  return out;
}

bool in_nilradical(const RatMatrix& m, const FlagContext& ctx) {
  if (m.n() != ctx.n) throw DomainError("matrix size does not match the block structure");
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (!ctx.below(i, j) && !m.at(i, j).is_zero()) return false;
  return true;
}

bool in_parabolic(const RatMatrix& m, const FlagContext& ctx) {
  if (m.n() != ctx.n) throw DomainError("matrix size does not match the block structure");
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (ctx.below(i, j) && !m.at(i, j).is_zero()) return false;
  return true;
}

bool in_opposite_unipotent_radical(const PolyMatrix& m, const FlagContext& ctx) {
  if (m.n() != ctx.n) throw DomainError("matrix size does not match the block structure");
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      if (ctx.above(i, j)) continue;
      const MultiPoly& e = m.at(i, j);
      if (i == j) {
        if (!e.is_constant() || !e.constant_value().is_one()) return false;
      } else if (!e.is_zero()) {
        return false;
      }
    }
  return true;
}

}  // namespace flagcurves
