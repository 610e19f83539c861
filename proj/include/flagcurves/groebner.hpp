#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "flagcurves/multipoly.hpp"

namespace flagcurves {

// Solver work is metered in reduction steps; exhausting the budget aborts
// with the partial basis so callers can degrade to an Unknown outcome.
struct BudgetExhausted : Error {
  std::vector<MultiPoly> partial;
  BudgetExhausted() : Error("step budget exhausted") {}
  explicit BudgetExhausted(std::vector<MultiPoly> p)
      : Error("step budget exhausted"), partial(std::move(p)) {}
};

class StepBudget {
 public:
  explicit StepBudget(long long steps) : remaining_(steps) {}
  void charge(long long n = 1) {
    remaining_ -= n;
    if (remaining_ < 0) throw BudgetExhausted();
  }
  long long remaining() const { return remaining_; }

 private:
  long long remaining_;
};

struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::GrevLex;
  std::vector<MultiPoly> generators;  // reduced: monic, minimal, inter-reduced, sorted
};

// Full normal form of f modulo basis under the order.
MultiPoly normal_form(MultiPoly f, const std::vector<MultiPoly>& basis, MonomialOrder order,
                      StepBudget& budget);

// Buchberger with the normal selection strategy (smallest lcm degree first;
// deterministic tie-breaks). The result is the reduced basis. Throws
// BudgetExhausted carrying the partial basis.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order,
                         StepBudget& budget);

// The ideal is the whole ring iff the reduced basis is {1}.
bool is_inconsistent(const GroebnerBasis& gb);

// All rational roots of a univariate polynomial given densely (index k =
// coefficient of x^k). The list is complete unless the budget interferes with
// divisor enumeration, in which case roots may be missed but never invented.
std::vector<Rational> rational_roots(const std::vector<Rational>& dense, StepBudget& budget);

struct PolySystem {
  RingPtr ring;  // every ring variable is an unknown
  std::vector<MultiPoly> equations;
};

struct Witness {
  std::map<std::string, Rational> assignment;  // total on the unknowns
};
struct Inconsistent {
  GroebnerBasis certificate;  // reduced basis {1}
};
struct Unknown {
  std::string reason;  // "budget-exhausted" | "no-rational-witness-found"
};
using SolveOutcome = std::variant<Witness, Inconsistent, Unknown>;

const char* outcome_name(const SolveOutcome& o);

// Decision pipeline: Groebner inconsistency test, then a deterministic
// rational witness search (forced linear eliminations, univariate rational
// roots, monomial-factor splits, lex Groebner retries, bounded guesses).
// A Witness is only returned after every original equation evaluates to zero;
// Inconsistent only with a {1} certificate. Anything else is Unknown.
SolveOutcome find_rational_witness(const PolySystem& sys, long long budget);

}  // namespace flagcurves
