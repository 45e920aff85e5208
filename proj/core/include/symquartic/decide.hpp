#pragma once

#include <array>
#include <optional>
#include <string>

#include "symquartic/certificates.hpp"
#include "symquartic/forms.hpp"
#include "symquartic/roots.hpp"

namespace symquartic {

/// An exact point of the domain where the form is negative.
struct Counterexample {
  std::array<Rational, 3> point;
  Rational value;
  /// "diag" for (x0, 1, 1), "edge" for (x0, 1, 0).
  std::string restriction;
  /// Interval around x0 on which the restriction stays negative.
  Bound lo;
  Bound hi;
};

struct DecideOptions {
  /// Build and check a certificate when the form holds.
  bool want_certificate = true;
};

struct Decision {
  bool holds = false;
  std::optional<Certificate> certificate;
  /// Set when the form holds, a certificate was requested and no
  /// construction covers the parameters.
  bool certificate_unavailable = false;
  std::optional<Counterexample> counterexample;
};

/// f >= 0 on the reals iff f(x, 1, 1) >= 0 for every real x; on the orthant
/// iff f(x, 1, 1) >= 0 and f(x, 1, 0) >= 0 for every x >= 0. Certificates are
/// verified before they are returned.
Decision decide(const QuarticForm& form, const DecideOptions& options = {});

}  // namespace symquartic
