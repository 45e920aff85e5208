#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "symquartic/algebraic.hpp"
#include "symquartic/number_field.hpp"
#include "symquartic/unipoly.hpp"

namespace symquartic {

/// Raised when t hits the pole t = -1/2 of the parametrization.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a parameter lies outside every case the parametrization covers.
class RangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The frontier curve t -> (b(t), c(t)):
//   c(t) = (2t^4 + 2(a+1)t^3 + (2a+4)t^2 + (3a+4)t - a) / (2t + 1)
//   b(t) = (t^4 + (a+4)t^3 + (5a+4)t^2 + 4(a+1)t + 2a + 2) / -(2t + 1)
// With b = b(t), c = c(t) the form vanishes at (t, 1, 1).

UniPoly c_numerator(const Rational& a);
UniPoly b_numerator(const Rational& a);

Rational c_of_t(const Rational& a, const Rational& t);
Rational b_of_t(const Rational& a, const Rational& t);
FieldElem c_of_t(const Rational& a, const FieldElem& t);
FieldElem b_of_t(const Rational& a, const FieldElem& t);

/// Scalars of the square decomposition
///   p = -(t^2 + t + 1)/(2t + 1),  q = (t^2 + 2t)/(2t + 1),
///   k = (2t^2 + 2(a+1)t + a + 2)/(t - 1).
/// k is absent at t = 1, where the decomposition does not depend on it.
template <class K>
struct PQK {
  K p;
  K q;
  std::optional<K> k;
};

PQK<Rational> pqk(const Rational& a, const Rational& t);
PQK<FieldElem> pqk(const Rational& a, const FieldElem& t);

/// Roots t1 <= t2 of 2t^2 + 2at + (a + 4), real when (a + 2)(a - 4) >= 0.
struct BranchPoints {
  AlgebraicNumber t1;
  AlgebraicNumber t2;
};

std::optional<BranchPoints> branch_points(const Rational& a);

enum class Section { RealCase, NonnegCase };

struct TInterval {
  AlgebraicNumber lo;
  bool lo_closed = true;
  AlgebraicNumber hi;
  bool hi_closed = true;

  bool contains(const AlgebraicNumber& t) const;
  std::string to_string() const;
};

/// The parameter range of one case ("3.1" .. "3.4" for real variables,
/// "7.1" .. "7.3" for nonnegative variables).
struct CaseSet {
  std::string label;
  std::vector<TInterval> intervals;

  bool contains(const AlgebraicNumber& t) const;
};

/// Throws RangeError for a = -1/2 (RealCase) or a >= -1 (NonnegCase).
CaseSet case_intervals(const Rational& a, Section section);

struct ParamPoint {
  AlgebraicNumber t;
  FieldElem bt;
  FieldElem ct;
  FieldElem p;
  FieldElem q;
  std::optional<FieldElem> k;
};

ParamPoint param_point(const Rational& a, const AlgebraicNumber& t);

/// Smallest t in case_intervals(a, RealCase) with c(t) = c. Requires
/// a != -1/2 and c >= -a^2 - 2a; throws RangeError otherwise.
AlgebraicNumber invert_c(const Rational& a, const Rational& c, const StepBudget& budget = {});

/// Smallest t in case_intervals(a, NonnegCase) with b(t) = b. Requires a < -1
/// and b between the case lower bound (-2(a+1), or a^2/4 + 2 for a <= -4)
/// and a^2 - 1; throws RangeError otherwise.
AlgebraicNumber invert_b(const Rational& a, const Rational& b, const StepBudget& budget = {});

struct FrontierOptions {
  Rational eps = decimal_epsilon(12);
  /// Caps each bisection loop; BudgetExhausted is thrown when exceeded.
  StepBudget budget;
};

struct BoundResult {
  enum class Kind { ClosedForm, Parametric };

  Kind kind = Kind::ClosedForm;
  /// Exact threshold; value.defining() is its minimal polynomial.
  AlgebraicNumber value;
  /// Frontier parameter, present for Parametric results.
  std::optional<AlgebraicNumber> t;
  /// Within eps of value.
  Rational approx;
  /// Point where the optimal form vanishes.
  std::vector<AlgebraicNumber> equality_point;
  /// Which rule produced the threshold, e.g. "3.1" or "closed-form".
  std::string rule;
};

struct Infeasible {
  std::string reason;
};

/// Smallest b for which w4 + a w3 + b w2 + c w1 >= 0 on R^3.
BoundResult bmin_real(const Rational& a, const Rational& c, const FrontierOptions& options = {});

/// Smallest c for which w4 + a w3 + b w2 + c w1 >= 0 on the nonnegative
/// orthant, or Infeasible when no c works for this (a, b).
std::variant<BoundResult, Infeasible> cmin_nonneg(const Rational& a, const Rational& b,
                                                  const FrontierOptions& options = {});

/// Lower end of the feasible b range on the orthant: a^2/4 + 2 for a <= -4,
/// otherwise -2(a + 1).
Rational nonneg_b_lower(const Rational& a);

}  // namespace symquartic
