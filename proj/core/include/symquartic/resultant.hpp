#pragma once

#include <vector>

#include "symquartic/unipoly.hpp"

namespace symquartic {

/// Polynomial in t whose coefficients are polynomials in s: entry i is the
/// coefficient of t^i.
using BiPoly = std::vector<UniPoly>;

/// Embeds a polynomial in t with constant (s-free) coefficients.
BiPoly lift_t(const UniPoly& t_poly);

/// Res_t(p, q) as a polynomial in s, via the subresultant pseudo-remainder
/// sequence over Q[s]. Zero iff p and q share a factor of positive degree in t.
UniPoly resultant(const BiPoly& p, const BiPoly& q);

/// Res(p, q) of two univariate polynomials.
Rational resultant(const UniPoly& p, const UniPoly& q);

}  // namespace symquartic
