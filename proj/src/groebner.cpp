#include "flagcurves/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "flagcurves/errors.hpp"
#include "flagcurves/ratfunc.hpp"

namespace flagcurves {

namespace {

MultiPoly make_monic(const MultiPoly& p, MonomialOrder order) {
  const Term* lt = p.leading_term(order);
  if (!lt || lt->coeff.is_one()) return p;
  return p.scaled(lt->coeff.inverse());
}

}  // namespace

MultiPoly normal_form(MultiPoly f, const std::vector<MultiPoly>& basis, MonomialOrder order,
                      StepBudget& budget) {
  if (f.is_zero() || basis.empty()) return f;
  const RingPtr ring = f.ring();
  MultiPoly tail = MultiPoly::zero(ring);
  while (!f.is_zero()) {
    budget.charge();
    const Term* lt = f.leading_term(order);
    bool reduced = false;
    for (const auto& g : basis) {
      const Term* ltg = g.leading_term(order);
      if (!ltg) continue;
      if (monomial_divides(ltg->exp, lt->exp)) {
        Exponents q = monomial_quotient(lt->exp, ltg->exp);
        f -= MultiPoly::monomial(ring, std::move(q), lt->coeff / ltg->coeff) * g;
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      MultiPoly head = MultiPoly::monomial(ring, lt->exp, lt->coeff);
      tail += head;
      f -= head;
    }
  }
  return tail;
}

namespace {

struct SPair {
  size_t i, j;
  Exponents lcm;
  uint64_t deg;
};

bool pair_before(const SPair& a, const SPair& b, MonomialOrder order) {
  if (a.deg != b.deg) return a.deg < b.deg;
  int c = compare_monomials(a.lcm, b.lcm, order);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> basis, MonomialOrder order,
                                    StepBudget& budget) {
  auto lt = [&](const MultiPoly& p) { return p.leading_term(order)->exp; };
  // Minimal: drop any generator whose leading monomial is divisible by
  // another's (on equal leading monomials keep the earlier one).
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (size_t j = 0; j < basis.size() && !drop; ++j) {
      if (j == i) continue;
      if (monomial_divides(lt(basis[j]), lt(basis[i]))) {
        if (lt(basis[j]) == lt(basis[i]) && j > i) continue;
        drop = true;
      }
    }
    if (!drop) minimal.push_back(basis[i]);
  }
  // Inter-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MultiPoly r = make_monic(normal_form(minimal[i], others, order, budget), order);
      if (r != minimal[i]) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[i] = std::move(r);
        }
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return compare_monomials(a.leading_term(order)->exp, b.leading_term(order)->exp, order) > 0;
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order,
                         StepBudget& budget) {
  std::vector<MultiPoly> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(make_monic(g, order));
  }
  for (const auto& g : basis)
    if (!(g.ring() == basis[0].ring() || g.ring()->same_vars(*basis[0].ring())))
      throw DomainError("generators live in different rings");
  try {
    auto lt = [&](size_t k) { return basis[k].leading_term(order)->exp; };
    std::vector<SPair> pairs;
    auto push_pairs_for = [&](size_t jnew) {
      for (size_t i = 0; i < jnew; ++i) {
        Exponents l = monomial_lcm(lt(i), lt(jnew));
        uint64_t d = exponent_degree(l);
        pairs.push_back(SPair{i, jnew, std::move(l), d});
      }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
      budget.charge();
      size_t best = 0;
      for (size_t k = 1; k < pairs.size(); ++k)
        if (pair_before(pairs[k], pairs[best], order)) best = k;
      SPair p = std::move(pairs[best]);
      pairs.erase(pairs.begin() + static_cast<long>(best));

      // Product criterion: coprime leading monomials reduce to zero.
      Exponents sum(p.lcm.size());
      const Exponents &ei = lt(p.i), &ej = lt(p.j);
      for (size_t k = 0; k < sum.size(); ++k) sum[k] = ei[k] + ej[k];
      if (sum == p.lcm) continue;

      const RingPtr& ring = basis[p.i].ring();
      MultiPoly s = MultiPoly::monomial(ring, monomial_quotient(p.lcm, ei), Rational(1)) * basis[p.i] -
                    MultiPoly::monomial(ring, monomial_quotient(p.lcm, ej), Rational(1)) * basis[p.j];
      MultiPoly r = normal_form(std::move(s), basis, order, budget);
      if (!r.is_zero()) {
        basis.push_back(make_monic(r, order));
        push_pairs_for(basis.size() - 1);
      }
    }
    return GroebnerBasis{order, reduce_basis(std::move(basis), order, budget)};
  } catch (BudgetExhausted&) {
    throw BudgetExhausted(std::move(basis));
  }
}

bool is_inconsistent(const GroebnerBasis& gb) {
  return gb.generators.size() == 1 && gb.generators[0].is_constant() &&
         !gb.generators[0].is_zero();
}

namespace {

std::vector<Integer> positive_divisors(const Integer& n_in, StepBudget& budget) {
  Integer n = n_in < 0 ? Integer(-n_in) : n_in;
  std::vector<Integer> divs;
  for (Integer d = 1; d * d <= n; ++d) {
    budget.charge();
    if (n % d == 0) {
      divs.push_back(d);
      divs.push_back(n / d);
    }
  }
  return divs;
}

Rational eval_dense(const std::vector<Rational>& dense, const Rational& x) {
  Rational acc(0);
  for (size_t k = dense.size(); k-- > 0;) acc = acc * x + dense[k];
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& dense_in, StepBudget& budget) {
  std::vector<Rational> dense = dense_in;
  while (!dense.empty() && dense.back().is_zero()) dense.pop_back();
  if (dense.empty()) throw DomainError("every value is a root of the zero polynomial");
  std::set<Rational> roots;
  size_t shift = 0;
  while (shift < dense.size() && dense[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.insert(Rational(0));
    dense.erase(dense.begin(), dense.begin() + static_cast<long>(shift));
  }
  if (dense.size() == 1) {
    // constant (nonzero)
  } else if (dense.size() == 2) {
    roots.insert(-dense[0] / dense[1]);
  } else {
    // Clear denominators and remove the integer content.
    Integer l(1);
    for (const auto& c : dense) l = boost::multiprecision::lcm(l, c.den());
    std::vector<Integer> ic;
    ic.reserve(dense.size());
    for (const auto& c : dense) ic.push_back((c * Rational(l)).num());
    Integer content(0);
    for (const auto& c : ic) content = boost::multiprecision::gcd(content, c);
    for (auto& c : ic) c /= content;
    // Candidates p/q with p | trailing and q | leading coefficient.
    auto ps = positive_divisors(ic.front(), budget);
    auto qs = positive_divisors(ic.back(), budget);
    for (const auto& p : ps)
      for (const auto& q : qs) {
        budget.charge();
        Rational cand(p, q);
        if (roots.count(cand) || roots.count(-cand)) continue;
        if (eval_dense(dense, cand).is_zero()) roots.insert(cand);
        if (eval_dense(dense, -cand).is_zero()) roots.insert(-cand);
      }
  }
  return std::vector<Rational>(roots.begin(), roots.end());
}

const char* outcome_name(const SolveOutcome& o) {
  if (std::holds_alternative<Witness>(o)) return "witness";
  if (std::holds_alternative<Inconsistent>(o)) return "inconsistent";
  return "unknown";
}

namespace {

struct EliminationStep {
  std::string var;
  MultiPoly expr;  // uses only variables still alive after this step
};

struct Searcher {
  RingPtr ring;
  StepBudget& budget;
  int guess_limit = 4;

  std::optional<std::map<std::string, Rational>> run(std::vector<MultiPoly> eqs) {
    std::vector<std::string> alive = ring->vars();
    return solve(std::move(eqs), std::move(alive), {}, {}, false, 0);
  }

  std::optional<std::map<std::string, Rational>> solve(std::vector<MultiPoly> eqs,
                                                       std::vector<std::string> alive,
                                                       std::vector<EliminationStep> stack,
                                                       std::map<std::string, Rational> numeric,
                                                       bool gb_done, int guess_depth) {
    for (;;) {
      budget.charge();
      // Simplify: drop zeros and duplicates; a nonzero constant kills the branch.
      {
        std::vector<MultiPoly> kept;
        for (auto& eq : eqs) {
          if (eq.is_zero()) continue;
          if (eq.is_constant()) return std::nullopt;
          bool dup = false;
          for (const auto& k : kept)
            if (k == eq) {
              dup = true;
              break;
            }
          if (!dup) kept.push_back(std::move(eq));
        }
        eqs = std::move(kept);
      }
      if (eqs.empty()) return finish(alive, stack, numeric);

      // Forced linear elimination: an unknown occurring linearly with a
      // nonzero constant coefficient.
      if (step_linear(eqs, alive, stack)) continue;

      // Assign variables no equation mentions.
      if (step_unused(eqs, alive, numeric)) continue;

      // Univariate equation: branch over its full set of rational roots.
      bool handled = false;
      std::optional<std::map<std::string, Rational>> result;
      if (step_univariate(eqs, alive, stack, numeric, guess_depth, handled, result))
        return result;
      if (handled) return std::nullopt;

      // Monomial factor split: x^k * g = 0 means x = 0 or g = 0.
      if (step_factor(eqs, alive, stack, numeric, gb_done, guess_depth, handled, result))
        return result;
      if (handled) return std::nullopt;

      // Lex Groebner basis once per branch, then retry the cheap steps.
      if (!gb_done) {
        GroebnerBasis gb = buchberger(eqs, MonomialOrder::Lex, budget);
        gb_done = true;
        if (is_inconsistent(gb)) return std::nullopt;
        eqs = gb.generators;
        continue;
      }

      // Bounded guessing as a last resort.
      if (guess_depth >= guess_limit || alive.empty()) return std::nullopt;
      const std::string v = alive.front();
      for (int cand : {0, 1, -1}) {
        auto sub_eqs = substitute_all(eqs, v, Rational(cand));
        auto sub_alive = without(alive, v);
        auto sub_numeric = numeric;
        sub_numeric[v] = Rational(cand);
        auto r = solve(std::move(sub_eqs), std::move(sub_alive), stack, std::move(sub_numeric),
                       false, guess_depth + 1);
        if (r) return r;
      }
      return std::nullopt;
    }
  }

 private:
  static std::vector<std::string> without(const std::vector<std::string>& alive,
                                          const std::string& v) {
    std::vector<std::string> out;
    out.reserve(alive.size());
    for (const auto& a : alive)
      if (a != v) out.push_back(a);
    return out;
  }

  std::vector<MultiPoly> substitute_all(const std::vector<MultiPoly>& eqs, const std::string& v,
                                        const Rational& value) {
    std::map<std::string, Rational> sub{{v, value}};
    std::vector<MultiPoly> out;
    out.reserve(eqs.size());
    for (const auto& eq : eqs) out.push_back(eq.substitute_values(sub));
    return out;
  }

  bool step_linear(std::vector<MultiPoly>& eqs, std::vector<std::string>& alive,
                   std::vector<EliminationStep>& stack) {
    for (const auto& eq : eqs) {
      for (const auto& v : alive) {
        size_t idx = *ring->index_of(v);
        if (eq.degree_in(idx) != 1) continue;
        auto coeffs = eq.coefficients_in(idx);
        if (!coeffs[1].is_constant()) continue;
        Rational c = coeffs[1].constant_value();
        MultiPoly expr = coeffs[0].scaled(-c.inverse());
        std::map<std::string, MultiPoly> sub{{v, expr}};
        for (auto& e : eqs) e = e.substitute(sub);
        stack.push_back(EliminationStep{v, std::move(expr)});
        alive = without(alive, v);
        return true;
      }
    }
    return false;
  }

  bool step_unused(const std::vector<MultiPoly>& eqs, std::vector<std::string>& alive,
                   std::map<std::string, Rational>& numeric) {
    bool any = false;
    std::vector<std::string> still;
    for (const auto& v : alive) {
      size_t idx = *ring->index_of(v);
      bool used = false;
      for (const auto& eq : eqs)
        if (eq.uses_var(idx)) {
          used = true;
          break;
        }
      if (used) {
        still.push_back(v);
      } else {
        numeric[v] = Rational(0);
        any = true;
      }
    }
    if (any) alive = std::move(still);
    return any;
  }

  // Returns true when a decisive answer (success or dead branch) was reached;
  // `handled` reports that a univariate equation existed.
  bool step_univariate(const std::vector<MultiPoly>& eqs, const std::vector<std::string>& alive,
                       const std::vector<EliminationStep>& stack,
                       const std::map<std::string, Rational>& numeric, int guess_depth,
                       bool& handled, std::optional<std::map<std::string, Rational>>& result) {
    for (const auto& eq : eqs) {
      std::optional<size_t> only;
      bool multi = false;
      for (const auto& v : alive) {
        size_t idx = *ring->index_of(v);
        if (eq.uses_var(idx)) {
          if (only && *only != idx) {
            multi = true;
            break;
          }
          only = idx;
        }
      }
      if (multi || !only) continue;
      handled = true;
      const std::string v = ring->var(*only);
      auto roots = rational_roots(dense_univariate(eq, *only), budget);
      for (const auto& root : roots) {
        auto sub_eqs = substitute_all(eqs, v, root);
        auto sub_numeric = numeric;
        sub_numeric[v] = root;
        auto r = solve(std::move(sub_eqs), without(alive, v), stack, std::move(sub_numeric),
                       false, guess_depth);
        if (r) {
          result = std::move(r);
          return true;
        }
      }
      return false;  // no rational root works on this branch
    }
    return false;
  }

  bool step_factor(const std::vector<MultiPoly>& eqs, const std::vector<std::string>& alive,
                   const std::vector<EliminationStep>& stack,
                   const std::map<std::string, Rational>& numeric, bool gb_done, int guess_depth,
                   bool& handled, std::optional<std::map<std::string, Rational>>& result) {
    for (size_t e = 0; e < eqs.size(); ++e) {
      const MultiPoly& eq = eqs[e];
      if (eq.terms().size() < 1) continue;
      for (const auto& v : alive) {
        size_t idx = *ring->index_of(v);
        uint32_t minexp = UINT32_MAX;
        for (const auto& t : eq.terms()) minexp = std::min(minexp, t.exp[idx]);
        if (minexp == 0 || minexp == UINT32_MAX) continue;
        handled = true;
        // Branch x = 0 first.
        {
          auto sub_eqs = substitute_all(eqs, v, Rational(0));
          auto sub_numeric = numeric;
          sub_numeric[v] = Rational(0);
          auto r = solve(std::move(sub_eqs), without(alive, v), stack, std::move(sub_numeric),
                         false, guess_depth);
          if (r) {
            result = std::move(r);
            return true;
          }
        }
        // Branch: divide the factor out of this single equation.
        {
          MultiPoly cof = MultiPoly::zero(eq.ring());
          for (const auto& t : eq.terms()) {
            Exponents ex = t.exp;
            ex[idx] -= minexp;
            cof += MultiPoly::monomial(eq.ring(), std::move(ex), t.coeff);
          }
          auto sub_eqs = eqs;
          sub_eqs[e] = std::move(cof);
          auto r = solve(std::move(sub_eqs), alive, stack, numeric, gb_done, guess_depth);
          if (r) {
            result = std::move(r);
            return true;
          }
        }
        return false;  // both branches explored and failed
      }
    }
    return false;
  }

  std::optional<std::map<std::string, Rational>> finish(const std::vector<std::string>& alive,
                                                        const std::vector<EliminationStep>& stack,
                                                        std::map<std::string, Rational> numeric) {
    for (const auto& v : alive) numeric[v] = Rational(0);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it)
      numeric[it->var] = it->expr.eval(numeric);
    return numeric;
  }
};

}  // namespace

SolveOutcome find_rational_witness(const PolySystem& sys, long long budget_steps) {
  StepBudget budget(budget_steps);
  bool budget_hit = false;

  GroebnerBasis gb;
  bool have_gb = false;
  try {
    gb = buchberger(sys.equations, MonomialOrder::GrevLex, budget);
    have_gb = true;
  } catch (const BudgetExhausted&) {
    budget_hit = true;
  }
  if (have_gb && is_inconsistent(gb)) return Inconsistent{std::move(gb)};

  std::optional<std::map<std::string, Rational>> found;
  try {
    Searcher searcher{sys.ring, budget};
    found = searcher.run(have_gb ? gb.generators : sys.equations);
  } catch (const BudgetExhausted&) {
    budget_hit = true;
  }

  if (found) {
    for (const auto& eq : sys.equations)
      if (!eq.eval(*found).is_zero())
        return Unknown{"no-rational-witness-found"};  // defensive; must not happen
    return Witness{std::move(*found)};
  }
  return Unknown{budget_hit ? "budget-exhausted" : "no-rational-witness-found"};
}

}  // namespace flagcurves
