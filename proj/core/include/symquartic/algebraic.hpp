#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "symquartic/roots.hpp"
#include "symquartic/unipoly.hpp"

namespace symquartic {

/// A real algebraic number: the unique root of an irreducible integer
/// polynomial inside a rational isolating interval.
///
/// Rational values are stored exactly with defining polynomial q*x - p and a
/// degenerate interval [r, r]. Irrational values keep their minimal
/// polynomial; since it has no rational roots, the interval endpoints are
/// never roots and the root lies strictly inside (lo, hi).
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  AlgebraicNumber(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// The root of p isolated by `interval` (see RootInterval). The defining
  /// polynomial is reduced to the irreducible factor of p vanishing there.
  static AlgebraicNumber from_root(const UniPoly& p, const RootInterval& interval);

  /// All real roots of p in the open interval (lo, hi), ascending.
  static std::vector<AlgebraicNumber> real_roots(const UniPoly& p, const Bound& lo = std::nullopt,
                                                 const Bound& hi = std::nullopt, const StepBudget& budget = {});

  bool is_rational() const { return lo_ == hi_; }
  /// Throws std::logic_error for irrational values.
  const Rational& rational() const;

  const UniPoly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  /// Rational r with |r - value| <= eps (eps > 0).
  Rational approx(const Rational& eps, const StepBudget& budget = {}) const;
  /// The same number with an isolating interval no wider than `width`; the
  /// new interval is nested in the current one.
  AlgebraicNumber narrowed(const Rational& width, const StepBudget& budget = {}) const;
  double to_double() const;

  int sign() const { return compare_rational(Rational(0)); }
  /// Sign of q evaluated at this number, decided exactly.
  int sign_of(const UniPoly& q) const;
  /// -1, 0, +1 as this number is below, equal to, above r.
  int compare_rational(const Rational& r) const;

  friend int compare(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs);
  friend bool operator==(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs) { return compare(lhs, rhs) == 0; }
  friend std::strong_ordering operator<=>(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs) {
    return compare(lhs, rhs) <=> 0;
  }

  std::string to_string() const;

 private:
  AlgebraicNumber(UniPoly defining, Rational lo, Rational hi);

  UniPoly defining_;
  Rational lo_;
  Rational hi_;
};

int compare(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs);
std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x);

}  // namespace symquartic
