#pragma once

#include <string>
#include <string_view>

#include "symquartic/multipoly.hpp"
#include "symquartic/rational.hpp"
#include "symquartic/unipoly.hpp"

namespace symquartic {

enum class Domain { Reals, NonnegativeOrthant };

std::string_view to_string(Domain domain);
/// Accepts "real"/"reals" and "nonneg"/"orthant"/"nonnegative".
Domain parse_domain(std::string_view text);

/// f = w4 + a*w3 + b*w2 + c*w1 together with the domain of (x, y, z).
struct QuarticForm {
  Rational a;
  Rational b;
  Rational c;
  Domain domain = Domain::Reals;
};

/// Expanded generators:
///   w4 = x^4 + y^4 + z^4
///   w3 = sum over ordered pairs of x^3*y
///   w2 = x^2*y^2 + y^2*z^2 + z^2*x^2
///   w1 = x*y*z*(x + y + z)
struct WBasis {
  MultiPoly w4;
  MultiPoly w3;
  MultiPoly w2;
  MultiPoly w1;
};

const WBasis& w_basis();

MultiPoly expand(const QuarticForm& form);

/// Exact value of f at (x, y, z).
Rational eval(const QuarticForm& form, const Rational& x, const Rational& y, const Rational& z);
double eval(const QuarticForm& form, double x, double y, double z);

/// f(x, 1, 1) = x^4 + 2a x^3 + (2b + c) x^2 + 2(a + c) x + (2 + 2a + b).
UniPoly restrict_diag(const QuarticForm& form);
/// f(x, 1, 0) = x^4 + a x^3 + b x^2 + a x + 1.
UniPoly restrict_edge(const QuarticForm& form);

}  // namespace symquartic
