#include "flagcurves/criterion.hpp"

#include <algorithm>

#include "flagcurves/errors.hpp"

namespace flagcurves {

std::vector<std::string> CriterionSystem::unknowns() const {
  std::vector<std::string> out = y_unknowns;
  out.insert(out.end(), r_unknowns.begin(), r_unknowns.end());
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> criterion_unknown_names(
    const FlagContext& ctx) {
  static const char* kYNames[] = {"u", "v", "w"};
  static const char* kRNames[] = {"a", "b", "c"};
  std::vector<std::string> y, r;
  size_t k = 0;
  for (auto [i, j] : ctx.below_positions()) {
    if (k < 3)
      y.push_back(kYNames[k]);
    else
      y.push_back("u" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    ++k;
  }
  k = 0;
  for (auto [i, j] : ctx.above_positions()) {
    if (k < 3)
      r.push_back(kRNames[k]);
    else
      r.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    ++k;
  }
  return {std::move(y), std::move(r)};
}

namespace {

struct SymbolicPieces {
  RingPtr full_ring;  // unknowns then t
  std::vector<std::string> y_names, r_names;
  PolyMatrix y, r, product;  // E(t) = M(t) * r * exp(tX)
};

SymbolicPieces assemble(const FlagContext& ctx, const RatMatrix& x) {
  if (x.n() != ctx.n) throw DomainError("matrix size does not match the block structure");
  if (x.is_zero()) throw ZeroCurveError("zero generator gives a constant curve");
  if (!in_nilradical(x, ctx))
    throw NilradicalPatternError("generator must be supported on the below-block positions");

  auto [y_names, r_names] = criterion_unknown_names(ctx);
  std::vector<std::string> vars;
  vars.reserve(y_names.size() + r_names.size() + 1);
  vars.insert(vars.end(), y_names.begin(), y_names.end());
  vars.insert(vars.end(), r_names.begin(), r_names.end());
  vars.push_back("t");
  RingPtr ring = PolyRing::make(vars);
  const size_t t_var = vars.size() - 1;

  PolyMatrix y(ring, ctx.n);
  {
    size_t k = 0;
    for (auto [i, j] : ctx.below_positions())
      y.at(i, j) = MultiPoly::variable(ring, y_names[k++]);
  }
  PolyMatrix r = PolyMatrix::identity(ring, ctx.n);
  {
    size_t k = 0;
    for (auto [i, j] : ctx.above_positions())
      r.at(i, j) = MultiPoly::variable(ring, r_names[k++]);
  }
  PolyMatrix m = exp_mobius_cleared(y, ctx, t_var);
  PolyMatrix xflow = exp_nilpotent(x, MultiPoly::variable(ring, t_var));
  PolyMatrix product = m * r * xflow;
  SymbolicPieces out{ring, std::move(y_names), std::move(r_names), std::move(y), std::move(r),
                     std::move(product)};
  return out;
}

}  // namespace

PolyMatrix criterion_curve_product(const FlagContext& ctx, const RatMatrix& x) {
  return assemble(ctx, x).product;
}

CriterionSystem build_criterion_system(const FlagContext& ctx, const RatMatrix& x) {
  SymbolicPieces pieces = assemble(ctx, x);
  const RingPtr& full = pieces.full_ring;
  const size_t t_var = full->arity() - 1;

  std::vector<std::string> unknown_vars(full->vars().begin(), full->vars().end() - 1);
  RingPtr ring = PolyRing::make(unknown_vars);

  CriterionSystem sys;
  sys.ctx = ctx;
  sys.generator = x;
  sys.ring = ring;
  sys.y_unknowns = pieces.y_names;
  sys.r_unknowns = pieces.r_names;

  for (const MultiPoly& entry : below_block_entries(pieces.product, ctx)) {
    for (const MultiPoly& coeff : entry.coefficients_in(t_var)) {
      if (coeff.is_zero()) continue;
      MultiPoly eq = coeff.mapped_to(ring);
      bool seen = false;
      for (const auto& existing : sys.equations)
        if (existing == eq) {
          seen = true;
          break;
        }
      if (!seen) sys.equations.push_back(std::move(eq));
    }
  }
  return sys;
}

std::vector<Rational> substitute_witness(const CriterionSystem& sys,
                                         const std::map<std::string, Rational>& assignment) {
  std::vector<Rational> out;
  out.reserve(sys.equations.size());
  for (const auto& eq : sys.equations) out.push_back(eq.eval(assignment));
  return out;
}

}  // namespace flagcurves
