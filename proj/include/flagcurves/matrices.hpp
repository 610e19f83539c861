#pragma once

#include <utility>
#include <vector>

#include "flagcurves/multipoly.hpp"

namespace flagcurves {

// Block structure of a standard parabolic: a composition of n. Position
// classes (0-based indices): below = strictly below the block diagonal,
// above = strictly above it, diag = inside a diagonal block.
struct FlagContext {
  int n = 0;
  std::vector<int> blocks;
  std::vector<int> block_of;  // size n

  FlagContext() = default;
  FlagContext(int n, std::vector<int> blocks);
  static FlagContext borel(int n);

  bool is_borel() const;
  bool below(int i, int j) const { return block_of[i] > block_of[j]; }
  bool above(int i, int j) const { return block_of[i] < block_of[j]; }
  bool diag(int i, int j) const { return block_of[i] == block_of[j]; }
  // Row-major position lists.
  std::vector<std::pair<int, int>> below_positions() const;
  std::vector<std::pair<int, int>> above_positions() const;
  std::vector<std::pair<int, int>> diag_positions() const;  // includes (i, i)

  bool operator==(const FlagContext& o) const { return n == o.n && blocks == o.blocks; }
};

// Dense n-by-n matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, Rational(0)) {}
  static RatMatrix identity(int n);
  static RatMatrix basis(int n, int i, int j);  // E_ij, 0-based

  int n() const { return n_; }
  const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

  bool is_zero() const;
  Rational trace() const;
  RatMatrix operator-() const;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, RatMatrix m);
  bool operator==(const RatMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  Rational det() const;
  RatMatrix inverse() const;  // adjugate over the exact field; det must be nonzero

  std::string str() const;

 private:
  void check_same(const RatMatrix& o) const;
  int n_ = 0;
  std::vector<Rational> e_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

// Dense n-by-n matrix of polynomials over a common ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, int n);
  static PolyMatrix identity(RingPtr ring, int n);
  static PolyMatrix from_rational(const RingPtr& ring, const RatMatrix& m);

  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const MultiPoly& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  MultiPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

  bool is_zero() const;
  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const MultiPoly& c) const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  MultiPoly det() const;
  // Inverse when det is a nonzero rational constant (adjugate / det); the
  // entries then stay polynomial.
  PolyMatrix inverse_constant_det() const;

  PolyMatrix substitute_values(const std::map<std::string, Rational>& subs) const;
  RatMatrix eval(const std::map<std::string, Rational>& point) const;

  std::string str() const;

 private:
  void check_same(const PolyMatrix& o) const;
  RingPtr ring_;
  int n_ = 0;
  std::vector<MultiPoly> e_;
};

// Least k >= 1 with X^k = 0; throws NotNilpotentError if X^n != 0.
int nilpotency_index(const RatMatrix& x);

// exp(scalar * X) for nilpotent X: sum over j < nilpotency index of
// scalar^j X^j / j!.
PolyMatrix exp_nilpotent(const RatMatrix& x, const MultiPoly& scalar);

// Same for a polynomial matrix that is structurally nilpotent; powers must
// vanish by X^bound.
PolyMatrix exp_nilpotent(const PolyMatrix& x, const MultiPoly& scalar, int bound);

// Denominator-cleared exponential of the Moebius reparameterisation:
//   sum over j = 0..n-1 of (-1)^j t^j (t+1)^(n-1-j) Y^j / j!
// which equals (t+1)^(n-1) exp(-(t/(t+1)) Y). Y must be supported on the
// below-block positions of ctx; t is the variable at index t_var of Y's ring.
PolyMatrix exp_mobius_cleared(const PolyMatrix& y, const FlagContext& ctx, size_t t_var);

// Conjugation Ad_p X = p X p^{-1}.
RatMatrix adjoint(const RatMatrix& p, const RatMatrix& x);
PolyMatrix adjoint(const PolyMatrix& p, const PolyMatrix& x);

// Entries at below-block positions, row-major.
std::vector<Rational> below_block_entries(const RatMatrix& m, const FlagContext& ctx);
std::vector<MultiPoly> below_block_entries(const PolyMatrix& m, const FlagContext& ctx);

// Membership tests for the block structure.
bool in_nilradical(const RatMatrix& m, const FlagContext& ctx);  // support below only
bool in_parabolic(const RatMatrix& m, const FlagContext& ctx);   // below entries vanish
bool in_opposite_unipotent_radical(const PolyMatrix& m, const FlagContext& ctx);

}  // namespace flagcurves
