#pragma once

#include <memory>
#include <string>

#include "symquartic/algebraic.hpp"
#include "symquartic/unipoly.hpp"

namespace symquartic {

/// Element of Q(alpha) for a real algebraic alpha, stored as a polynomial in
/// alpha reduced modulo its minimal polynomial. Elements with no generator
/// are plain rationals and mix freely with any field.
class FieldElem {
 public:
  using Generator = std::shared_ptr<const AlgebraicNumber>;

  FieldElem() = default;
  FieldElem(const Rational& value);  // NOLINT(google-explicit-constructor)
  FieldElem(const Generator& generator, const UniPoly& representation);

  /// alpha itself as a field element; collapses to a rational when alpha is.
  static FieldElem embed(const AlgebraicNumber& alpha);

  const Generator& generator() const { return gen_; }
  const UniPoly& representation() const { return rep_; }

  bool is_rational() const { return rep_.degree() <= 0; }
  /// Throws std::logic_error when the element is irrational.
  Rational rational() const;
  bool is_zero() const { return rep_.is_zero(); }

  int sign() const;
  Rational approx(const Rational& eps) const;
  double to_double() const;

  FieldElem inverse() const;

  FieldElem& operator+=(const FieldElem& other);
  FieldElem& operator-=(const FieldElem& other);
  FieldElem& operator*=(const FieldElem& other);
  FieldElem& operator/=(const FieldElem& other) { return *this *= other.inverse(); }

  friend FieldElem operator+(FieldElem lhs, const FieldElem& rhs) { return lhs += rhs; }
  friend FieldElem operator-(FieldElem lhs, const FieldElem& rhs) { return lhs -= rhs; }
  friend FieldElem operator*(FieldElem lhs, const FieldElem& rhs) { return lhs *= rhs; }
  friend FieldElem operator/(FieldElem lhs, const FieldElem& rhs) { return lhs /= rhs; }
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& lhs, const FieldElem& rhs) { return (lhs - rhs).is_zero(); }

  /// The same number as a standalone AlgebraicNumber. Its minimal polynomial
  /// comes from Res_t(m(t), s - E(t)), reduced to the factor vanishing here.
  AlgebraicNumber to_algebraic() const;

  std::string to_string() const;

 private:
  void adopt(const Generator& other);
  void reduce();

  Generator gen_;
  UniPoly rep_;
};

inline bool is_zero(const FieldElem& value) { return value.is_zero(); }

}  // namespace symquartic
