#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "symquartic/rational.hpp"

namespace symquartic {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coefficients);
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& value);
  static UniPoly monomial(const Rational& coefficient, int degree);
  static UniPoly x() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  UniPoly operator()(const UniPoly& inner) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const Rational& factor);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(UniPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(const Rational& lhs, UniPoly rhs) { return rhs *= lhs; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

struct DivModResult {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws std::domain_error when `divisor` is zero.
DivModResult divmod(const UniPoly& dividend, const UniPoly& divisor);

/// Monic greatest common divisor (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;    // s*a + t*b == gcd
  UniPoly t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), made monic. Zero stays zero.
UniPoly squarefree_part(const UniPoly& p);

/// Positive rational multiple of `p` with coprime integer coefficients and a
/// positive leading coefficient.
UniPoly primitive_integer(const UniPoly& p);

UniPoly pow(const UniPoly& base, unsigned exponent);

}  // namespace symquartic
