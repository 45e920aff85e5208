#pragma once

#include <vector>

#include "symquartic/unipoly.hpp"

namespace symquartic {

/// Irreducible factors over Q of the squarefree part of p, each returned as a
/// primitive integer polynomial with positive leading coefficient, ordered by
/// degree then coefficients. Constants have no factors.
///
/// Factoring is done modulo a single prime large enough to exceed twice the
/// Mignotte bound, then lifted factors are recombined by trial division, so
/// no Hensel lifting is needed. Intended for the small degrees (<= 8) that
/// arise from quartic restrictions and their resultants.
std::vector<UniPoly> irreducible_factors(const UniPoly& p);

}  // namespace symquartic
