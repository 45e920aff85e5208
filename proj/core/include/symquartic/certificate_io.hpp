#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "symquartic/certificates.hpp"

namespace symquartic {

class MalformedCertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kCertificateVersion = 1;

/// Canonical JSON: object keys sorted, scalars in lowest terms as "p/q"
/// strings, monomials in exponent order. Scalars of Q(t) are arrays of
/// coefficient strings in increasing powers of t.
std::string to_json(const Certificate& cert);

/// Throws MalformedCertificate on any structural or numeric problem,
/// including an interval that does not isolate a root of the defining
/// polynomial.
Certificate certificate_from_json(std::string_view text);

}  // namespace symquartic
