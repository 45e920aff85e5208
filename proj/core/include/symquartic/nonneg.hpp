#pragma once

#include <optional>

#include "symquartic/roots.hpp"
#include "symquartic/unipoly.hpp"

namespace symquartic {

enum class HalfLine { AllReals, Nonnegative };

struct NonnegVerdict {
  bool nonneg = true;
  /// When !nonneg: a rational point of the domain with p(witness) < 0,
  /// chosen as the simplest such rational among the sampled negative gaps.
  std::optional<Rational> witness;
  /// Bracket (lo, hi) around the witness on which p stays negative;
  /// std::nullopt ends are unbounded.
  Bound witness_lo;
  Bound witness_hi;
};

/// Decides p(x) >= 0 on the domain exactly: isolates the distinct real roots
/// and checks one sample in every gap between consecutive roots. The zero
/// polynomial counts as nonnegative.
NonnegVerdict univariate_nonneg(const UniPoly& p, HalfLine domain);

}  // namespace symquartic
