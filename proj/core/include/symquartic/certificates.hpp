#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symquartic/algebraic.hpp"
#include "symquartic/forms.hpp"
#include "symquartic/multipoly.hpp"
#include "symquartic/number_field.hpp"

namespace symquartic {

/// Raised when a certificate constructor is called outside its region.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// coefficient * base^2
struct WeightedSquare {
  Rational coefficient;
  MultiPoly base;
};

using SquareCombo = std::vector<WeightedSquare>;

MultiPoly expand(const SquareCombo& combo);

/// Random nonnegativity check recorded for facts without an algebraic proof.
struct SpotCheck {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double min_value = 0.0;
};

struct BaseFact {
  std::string name;
  MultiPoly polynomial;
  /// The fact is nonnegative on this domain (Reals covers the orthant too).
  Domain validity = Domain::Reals;
  /// Present for facts proved by squares; absent for axioms.
  std::optional<SquareCombo> witness;
  std::optional<SpotCheck> spot_check;

  bool is_axiom() const { return !witness.has_value(); }
};

const std::vector<BaseFact>& catalog();
/// nullptr when no fact has this name.
const BaseFact* find_fact(std::string_view name);

/// True when facts valid on `fact` may be used for forms on `target`.
bool covers(Domain fact, Domain target);

enum class CertificateKind { UVIdentity, XYZIdentity, SchurConic, Theorem2Combo };

std::string_view to_string(CertificateKind kind);
CertificateKind parse_certificate_kind(std::string_view text);

struct FactTerm {
  std::string name;
};

struct SquareTerm {
  FieldMultiPoly base;
};

/// multiplier * fact, or multiplier * base^2.
struct CertTerm {
  FieldElem multiplier;
  std::variant<FactTerm, SquareTerm> body;
};

/// A conic combination claimed to equal expand(form). For XYZIdentity with
/// irrational t, every scalar lives in Q(t).
struct Certificate {
  CertificateKind kind = CertificateKind::UVIdentity;
  Domain domain = Domain::Reals;
  QuarticForm form;
  std::optional<AlgebraicNumber> t;
  std::vector<CertTerm> terms;
};

/// Sum of the terms, with facts expanded from the catalog. Throws
/// std::invalid_argument on an unknown fact.
FieldMultiPoly combination(const Certificate& cert);

/// u = (x-y)(x+y+az), v = (x-z)(x+z+ay).
MultiPoly uv_u(const Rational& a);
MultiPoly uv_v(const Rational& a);

/// X = x^2 + pxy + pxz + qyz and its cyclic images Y, Z.
template <class K>
std::array<BasicMultiPoly<K>, 3> xyz_polys(const K& p, const K& q) {
  using P = BasicMultiPoly<K>;
  const K one(Rational(1));
  return {P::term(one, {2, 0, 0}) + P::term(p, {1, 1, 0}) + P::term(p, {1, 0, 1}) + P::term(q, {0, 1, 1}),
          P::term(one, {0, 2, 0}) + P::term(p, {0, 1, 1}) + P::term(p, {1, 1, 0}) + P::term(q, {1, 0, 1}),
          P::term(one, {0, 0, 2}) + P::term(p, {1, 0, 1}) + P::term(p, {0, 1, 1}) + P::term(q, {1, 1, 0})};
}

/// Requires c <= -a^2 - 2a and b >= -2a - c - 1.
Certificate cert_theorem1(const Rational& a, const Rational& b, const Rational& c);
/// a = -1/2. Requires b >= max(-c, c/2 - 9/8); c <= 3/4 is handed to
/// cert_theorem1.
Certificate cert_theorem2(const Rational& b, const Rational& c);
/// Orthant, a >= -1, b >= -2(a+1), c >= -2a - b - 1.
Certificate cert_schur_nonneg(const Rational& a, const Rational& b, const Rational& c);
/// Orthant, b >= a^2 - 1 and 2a + b + c + 1 >= 0: the u, v identity plus
/// slack in w2, w2 - w1 and w1.
Certificate cert_uv_nonneg(const Rational& a, const Rational& b, const Rational& c);
/// Square decomposition at parameter t. On the reals t must lie in
/// case_intervals(a, RealCase), c = c(t) and b >= b(t). On the orthant t must
/// lie in case_intervals(a, NonnegCase), b = b(t) and c >= c(t).
Certificate cert_xyz(const Rational& a, const AlgebraicNumber& t, const Rational& b, const Rational& c,
                     Domain domain = Domain::Reals);

/// A certificate for the form whenever one of the constructions applies;
/// std::nullopt when the form is not nonnegative on its domain.
std::optional<Certificate> certificate_for(const QuarticForm& form);

struct Verification {
  enum class Status { Valid, NegativeMultiplier, UnknownFact, DomainMismatch, FieldMismatch, ResidualNonzero };

  Status status = Status::Valid;
  std::string reason;

  bool valid() const { return status == Status::Valid; }
};

std::string_view to_string(Verification::Status status);

/// Exact check that cert proves form >= 0 on form.domain.
Verification verify(const Certificate& cert, const QuarticForm& form);

}  // namespace symquartic
