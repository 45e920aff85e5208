#include "symquartic/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "symquartic/frontier.hpp"

namespace symquartic {
namespace {

const MultiPoly& X() {
  static const MultiPoly p = MultiPoly::x();
  return p;
}
const MultiPoly& Y() {
  static const MultiPoly p = MultiPoly::y();
  return p;
}
const MultiPoly& Z() {
  static const MultiPoly p = MultiPoly::z();
  return p;
}

SpotCheck spot_check(const MultiPoly& p, std::uint64_t seed) {
  std::vector<std::pair<double, Exponent>> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(to_double(c), e);
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  SpotCheck record{100000, seed, INFINITY};
  for (std::size_t n = 0; n < record.samples; ++n) {
    // Normalized exponentials are uniform on the simplex.
    double v[3] = {expo(rng), expo(rng), expo(rng)};
    const double s = v[0] + v[1] + v[2];
    for (double& x : v) x /= s;
    double total = 0.0;
    for (const auto& [c, e] : terms) total += c * std::pow(v[0], e[0]) * std::pow(v[1], e[1]) * std::pow(v[2], e[2]);
    record.min_value = std::min(record.min_value, total);
  }
  return record;
}

std::vector<BaseFact> build_catalog() {
  const WBasis& w = w_basis();
  const Rational one(1);
  const Rational half(1, 2);
  const std::array<std::pair<MultiPoly, MultiPoly>, 3> pairs{{{X(), Y()}, {Y(), Z()}, {Z(), X()}}};

  std::vector<BaseFact> facts;
  auto add = [&](std::string name, MultiPoly poly, Domain validity, std::optional<SquareCombo> witness) {
    BaseFact f{std::move(name), std::move(poly), validity, std::move(witness), std::nullopt};
    if (f.is_axiom()) f.spot_check = spot_check(f.polynomial, 0x5c4u + facts.size());
    facts.push_back(std::move(f));
  };

  // (x-y)^2 (x^2+xy+y^2) = ((x-y)(x+y/2))^2 + 3/4 ((x-y)y)^2, summed over pairs.
  SquareCombo two_w4_w3;
  for (const auto& [s, r] : pairs) {
    two_w4_w3.push_back({one, (s - r) * (s + r * half)});
    two_w4_w3.push_back({Rational(3, 4), (s - r) * r});
  }
  add("2w4-w3", w.w4 * Rational(2) - w.w3, Domain::Reals, two_w4_w3);

  SquareCombo w4_w2;
  for (const auto& [s, r] : pairs) w4_w2.push_back({half, s * s - r * r});
  add("w4-w2", w.w4 - w.w2, Domain::Reals, w4_w2);

  SquareCombo w2;
  for (const auto& [s, r] : pairs) w2.push_back({one, s * r});
  add("w2", w.w2, Domain::Reals, w2);

  const MultiPoly xy = X() * Y(), yz = Y() * Z(), zx = Z() * X();
  SquareCombo w2_w1{{half, xy - yz}, {half, yz - zx}, {half, zx - xy}};
  add("w2-w1", w.w2 - w.w1, Domain::Reals, w2_w1);

  SquareCombo twice_w2_w1;
  for (const auto& sq : w2_w1) twice_w2_w1.push_back({sq.coefficient * 2, sq.base});
  add("2w2-2w1", (w.w2 - w.w1) * Rational(2), Domain::Reals, twice_w2_w1);

  SquareCombo w2_2w1{{one, xy + yz + zx}};
  add("w2+2w1", w.w2 + w.w1 * Rational(2), Domain::Reals, w2_2w1);

  SquareCombo two_w2_w1 = w2_w1;
  two_w2_w1.insert(two_w2_w1.end(), w2.begin(), w2.end());
  add("2w2-w1", w.w2 * Rational(2) - w.w1, Domain::Reals, two_w2_w1);

  add("w1", w.w1, Domain::NonnegativeOrthant, std::nullopt);
  add("w3-2w2", w.w3 - w.w2 * Rational(2), Domain::NonnegativeOrthant, std::nullopt);
  add("schur", w.w4 + w.w1 - w.w3, Domain::NonnegativeOrthant, std::nullopt);
  return facts;
}

FieldMultiPoly lift(const MultiPoly& p) { return FieldMultiPoly::from(p); }

CertTerm fact(const FieldElem& multiplier, std::string name) { return {multiplier, FactTerm{std::move(name)}}; }
CertTerm square(const FieldElem& multiplier, FieldMultiPoly base) {
  return {multiplier, SquareTerm{std::move(base)}};
}

// u^2 + v^2 - uv = (u - v/2)^2 + 3/4 v^2
void push_uv_squares(std::vector<CertTerm>& terms, const Rational& a) {
  const MultiPoly u = uv_u(a);
  const MultiPoly v = uv_v(a);
  terms.push_back(square(Rational(1), lift(u - v * Rational(1, 2))));
  terms.push_back(square(Rational(3, 4), lift(v)));
}

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

bool in_case(const Rational& a, const AlgebraicNumber& t, Section section) {
  try {
    return case_intervals(a, section).contains(t);
  } catch (const RangeError&) {
    return false;
  }
}

}  // namespace

MultiPoly expand(const SquareCombo& combo) {
  MultiPoly out;
  for (const auto& sq : combo) out += sq.base * sq.base * sq.coefficient;
  return out;
}

const std::vector<BaseFact>& catalog() {
  static const std::vector<BaseFact> facts = build_catalog();
  return facts;
}

const BaseFact* find_fact(std::string_view name) {
  for (const auto& f : catalog()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

bool covers(Domain fact, Domain target) { return fact == Domain::Reals || fact == target; }

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::UVIdentity:
      return "uv-identity";
    case CertificateKind::XYZIdentity:
      return "xyz-identity";
    case CertificateKind::SchurConic:
      return "schur-conic";
    case CertificateKind::Theorem2Combo:
      return "a-minus-half-combo";
  }
  return "?";
}

CertificateKind parse_certificate_kind(std::string_view text) {
  for (auto k : {CertificateKind::UVIdentity, CertificateKind::XYZIdentity, CertificateKind::SchurConic,
                 CertificateKind::Theorem2Combo}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown certificate kind: " + std::string(text));
}

FieldMultiPoly combination(const Certificate& cert) {
  FieldMultiPoly total;
  for (const auto& term : cert.terms) {
    if (const auto* f = std::get_if<FactTerm>(&term.body)) {
      const BaseFact* base = find_fact(f->name);
      if (!base) throw std::invalid_argument("unknown fact: " + f->name);
      total += lift(base->polynomial) * term.multiplier;
    } else {
      const auto& sq = std::get<SquareTerm>(term.body).base;
      total += sq * sq * term.multiplier;
    }
  }
  return total;
}

MultiPoly uv_u(const Rational& a) { return (X() - Y()) * (X() + Y() + Z() * a); }
MultiPoly uv_v(const Rational& a) { return (X() - Z()) * (X() + Z() + Y() * a); }

Certificate cert_theorem1(const Rational& a, const Rational& b, const Rational& c) {
  require(c <= -a * a - 2 * a, "cert_theorem1: needs c <= -a^2 - 2a");
  require(b >= -2 * a - c - 1, "cert_theorem1: needs b >= -2a - c - 1");
  Certificate cert{CertificateKind::UVIdentity, Domain::Reals, {a, b, c, Domain::Reals}, std::nullopt, {}};
  push_uv_squares(cert.terms, a);
  cert.terms.push_back(fact(Rational(2 * a + b + c + 1), "w2"));
  cert.terms.push_back(fact(Rational(-c - a * a - 2 * a), "w2-w1"));
  return cert;
}

Certificate cert_theorem2(const Rational& b, const Rational& c) {
  const Rational a(-1, 2);
  require(b >= -c && b >= c / 2 - Rational(9, 8), "cert_theorem2: needs b >= max(-c, c/2 - 9/8)");
  if (c <= Rational(3, 4)) return cert_theorem1(a, b, c);
  Certificate cert{CertificateKind::Theorem2Combo, Domain::Reals, {a, b, c, Domain::Reals}, std::nullopt, {}};
  push_uv_squares(cert.terms, a);
  cert.terms.push_back(fact(Rational((c - Rational(3, 4)) / 2), "w2+2w1"));
  cert.terms.push_back(fact(Rational(b - c / 2 + Rational(9, 8)), "w2"));
  return cert;
}

Certificate cert_schur_nonneg(const Rational& a, const Rational& b, const Rational& c) {
  require(a >= -1, "cert_schur_nonneg: needs a >= -1");
  require(b >= -2 * (a + 1), "cert_schur_nonneg: needs b >= -2(a+1)");
  require(c >= -2 * a - b - 1, "cert_schur_nonneg: needs c >= -2a - b - 1");
  const Domain d = Domain::NonnegativeOrthant;
  Certificate cert{CertificateKind::SchurConic, d, {a, b, c, d}, std::nullopt, {}};
  cert.terms.push_back(fact(Rational(1), "schur"));
  cert.terms.push_back(fact(Rational(a + 1), "w3-2w2"));
  cert.terms.push_back(fact(Rational(2 * a + 2 + b), "w2-w1"));
  cert.terms.push_back(fact(Rational(2 * a + b + c + 1), "w1"));
  return cert;
}

Certificate cert_uv_nonneg(const Rational& a, const Rational& b, const Rational& c) {
  require(b >= a * a - 1, "cert_uv_nonneg: needs b >= a^2 - 1");
  require(2 * a + b + c + 1 >= 0, "cert_uv_nonneg: needs 2a + b + c + 1 >= 0");
  const Domain d = Domain::NonnegativeOrthant;
  Certificate cert{CertificateKind::UVIdentity, d, {a, b, c, d}, std::nullopt, {}};
  push_uv_squares(cert.terms, a);
  const Rational excess_c = c + a * a + 2 * a;
  const Rational beta = sgn(excess_c) < 0 ? Rational(-excess_c) : Rational(0);
  cert.terms.push_back(fact(Rational(b - a * a + 1 - beta), "w2"));
  cert.terms.push_back(fact(beta, "w2-w1"));
  cert.terms.push_back(fact(Rational(excess_c + beta), "w1"));
  return cert;
}

Certificate cert_xyz(const Rational& a, const AlgebraicNumber& t, const Rational& b, const Rational& c,
                     Domain domain) {
  const bool real = domain == Domain::Reals;
  require(in_case(a, t, real ? Section::RealCase : Section::NonnegCase), "cert_xyz: t outside the case intervals");
  const FieldElem tf = FieldElem::embed(t);
  const FieldElem bt = b_of_t(a, tf);
  const FieldElem ct = c_of_t(a, tf);
  const FieldElem slack_b = FieldElem(b) - bt;
  const FieldElem slack_c = FieldElem(c) - ct;
  if (real) {
    require(slack_c.is_zero(), "cert_xyz: needs c = c(t)");
    require(slack_b.sign() >= 0, "cert_xyz: needs b >= b(t)");
  } else {
    require(slack_b.is_zero(), "cert_xyz: needs b = b(t)");
    require(slack_c.sign() >= 0, "cert_xyz: needs c >= c(t)");
  }

  Certificate cert{CertificateKind::XYZIdentity, domain, {a, b, c, domain}, t, {}};
  const PQK<FieldElem> s = pqk(a, tf);
  const auto [px, py, pz] = xyz_polys(s.p, s.q);
  if (!s.k) {
    // t = 1: XY + YZ + ZX vanishes, so X^2 + Y^2 + Z^2 = (X + Y + Z)^2.
    cert.terms.push_back(square(Rational(1), px + py + pz));
  } else {
    const FieldElem& k = *s.k;
    if ((k + FieldElem(Rational(1))).sign() < 0) throw std::logic_error("cert_xyz: k < -1");
    if ((FieldElem(Rational(2)) - k).sign() < 0) throw std::logic_error("cert_xyz: k > 2");
    const FieldElem outer = (k + FieldElem(Rational(1))) / FieldElem(Rational(3));
    const FieldElem inner = (FieldElem(Rational(2)) - k) / FieldElem(Rational(6));
    cert.terms.push_back(square(outer, px + py + pz));
    cert.terms.push_back(square(inner, px - py));
    cert.terms.push_back(square(inner, py - pz));
    cert.terms.push_back(square(inner, pz - px));
  }
  cert.terms.push_back(fact(slack_b, "w2"));
  if (!real) cert.terms.push_back(fact(slack_c, "w1"));
  return cert;
}

std::optional<Certificate> certificate_for(const QuarticForm& form) {
  const Rational& a = form.a;
  const Rational& b = form.b;
  const Rational& c = form.c;
  if (form.domain == Domain::Reals) {
    if (c <= -a * a - 2 * a) {
      if (b < -2 * a - c - 1) return std::nullopt;
      return cert_theorem1(a, b, c);
    }
    if (a == Rational(-1, 2)) {
      if (b < c / 2 - Rational(9, 8)) return std::nullopt;
      return cert_theorem2(b, c);
    }
    const AlgebraicNumber t = invert_c(a, c);
    const FieldElem bt = b_of_t(a, FieldElem::embed(t));
    if ((FieldElem(b) - bt).sign() < 0) return std::nullopt;
    return cert_xyz(a, t, b, c, Domain::Reals);
  }

  if (b < nonneg_b_lower(a)) return std::nullopt;
  if (a >= -1) {
    if (c < -2 * a - b - 1) return std::nullopt;
    return cert_schur_nonneg(a, b, c);
  }
  if (b >= a * a - 1) {
    if (2 * a + b + c + 1 < 0) return std::nullopt;
    return cert_uv_nonneg(a, b, c);
  }
  const AlgebraicNumber t = invert_b(a, b);
  const FieldElem ct = c_of_t(a, FieldElem::embed(t));
  if ((FieldElem(c) - ct).sign() < 0) return std::nullopt;
  return cert_xyz(a, t, b, c, Domain::NonnegativeOrthant);
}

std::string_view to_string(Verification::Status status) {
  switch (status) {
    case Verification::Status::Valid:
      return "valid";
    case Verification::Status::NegativeMultiplier:
      return "negative-multiplier";
    case Verification::Status::UnknownFact:
      return "unknown-fact";
    case Verification::Status::DomainMismatch:
      return "domain-mismatch";
    case Verification::Status::FieldMismatch:
      return "field-mismatch";
    case Verification::Status::ResidualNonzero:
      return "residual-nonzero";
  }
  return "?";
}

Verification verify(const Certificate& cert, const QuarticForm& form) {
  using Status = Verification::Status;
  if (!covers(cert.domain, form.domain)) {
    return {Status::DomainMismatch, "certificate domain " + std::string(to_string(cert.domain)) +
                                        " does not contain " + std::string(to_string(form.domain))};
  }
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    const CertTerm& term = cert.terms[i];
    if (const auto* f = std::get_if<FactTerm>(&term.body)) {
      const BaseFact* base = find_fact(f->name);
      if (!base) return {Status::UnknownFact, "term " + std::to_string(i) + ": unknown fact " + f->name};
      if (!covers(base->validity, form.domain)) {
        return {Status::DomainMismatch, "term " + std::to_string(i) + ": fact " + f->name + " holds only on " +
                                            std::string(to_string(base->validity))};
      }
    }
    if (term.multiplier.sign() < 0) {
      return {Status::NegativeMultiplier, "term " + std::to_string(i) + ": multiplier " +
                                              term.multiplier.to_string() + " is negative"};
    }
  }
  try {
    const FieldMultiPoly residual = combination(cert) - lift(expand(form));
    if (!residual.is_zero()) {
      return {Status::ResidualNonzero, "residual " + residual.to_string() + " is not zero"};
    }
  } catch (const std::invalid_argument& e) {
    return {Status::FieldMismatch, e.what()};
  }
  return {};
}

}  // namespace symquartic
