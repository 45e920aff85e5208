#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symquartic/unipoly.hpp"

namespace symquartic {

/// An interval endpoint; std::nullopt stands for -inf (lower) or +inf (upper).
using Bound = std::optional<Rational>;

/// Thrown when a refinement loop exceeds its caller-supplied step budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps the number of bisection steps a single call may take.
struct StepBudget {
  std::size_t max_steps = std::numeric_limits<std::size_t>::max();

  void spend(std::size_t& used) const {
    if (++used > max_steps) throw BudgetExhausted("step budget exhausted");
  }
};

/// Every real root r of p satisfies |r| < cauchy_bound(p). Requires p nonzero.
Rational cauchy_bound(const UniPoly& p);

/// Canonical Sturm chain p, p', -rem(p, p'), ... of a nonzero polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Sign changes of the chain at x, zeros skipped. nullopt with `at_plus_inf`
/// evaluates at +inf, otherwise at -inf.
int sign_variations(const std::vector<UniPoly>& chain, const Bound& x, bool at_plus_inf);

/// Number of distinct real roots of p in (lo, hi]. An unbounded lower/upper
/// end means -inf/+inf. Throws std::invalid_argument for the zero polynomial.
std::size_t sturm_root_count(const UniPoly& p, const Bound& lo = std::nullopt, const Bound& hi = std::nullopt);

/// Isolating interval for one real root. Either lo == hi (the root is exactly
/// lo), or lo < hi, neither endpoint is a root, and exactly one root lies in
/// the open interval (lo, hi).
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// All distinct real roots of p in the open interval (lo, hi), ordered and
/// pairwise disjoint. The zero polynomial and constants have no roots.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Bound& lo = std::nullopt,
                                        const Bound& hi = std::nullopt, const StepBudget& budget = {});

/// Shrinks an isolating interval of a squarefree p until hi - lo <= width.
RootInterval refine_interval(const UniPoly& squarefree, RootInterval interval, const Rational& width,
                             const StepBudget& budget = {});

}  // namespace symquartic
