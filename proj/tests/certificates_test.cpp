#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "symquartic/certificates.hpp"
#include "symquartic/frontier.hpp"
#include "test_support.hpp"

using namespace symquartic;
using symquartic::testing::RationalGen;

namespace {

MultiPoly X() { return MultiPoly::x(); }
MultiPoly Y() { return MultiPoly::y(); }
MultiPoly Z() { return MultiPoly::z(); }

QuarticForm form(const Rational& a, const Rational& b, const Rational& c, Domain d = Domain::Reals) {
  return {a, b, c, d};
}

std::vector<Rational> fact_multipliers(const Certificate& cert) {
  std::vector<Rational> out;
  for (const auto& term : cert.terms) {
    if (std::holds_alternative<FactTerm>(term.body)) out.push_back(term.multiplier.rational());
  }
  return out;
}

std::vector<std::string> fact_names(const Certificate& cert) {
  std::vector<std::string> out;
  for (const auto& term : cert.terms) {
    if (const auto* f = std::get_if<FactTerm>(&term.body)) out.push_back(f->name);
  }
  return out;
}

// Coordinates of a symmetric quartic in the basis w4, w3, w2, w1.
Eigen::Vector4d w_coords(const MultiPoly& p) {
  return {to_double(p.coeff({4, 0, 0})), to_double(p.coeff({3, 1, 0})), to_double(p.coeff({2, 2, 0})),
          to_double(p.coeff({2, 1, 1}))};
}

// Independent oracle for the fact multipliers: subtract the square terms from
// the form and solve for the fact weights by least squares in w-coordinates.
std::vector<double> solve_multipliers(const Certificate& cert) {
  MultiPoly rest = expand(cert.form);
  std::vector<const BaseFact*> facts;
  for (const auto& term : cert.terms) {
    if (const auto* s = std::get_if<SquareTerm>(&term.body)) {
      MultiPoly base;
      for (const auto& [e, c] : s->base.terms()) base.add_term(e, c.rational());
      rest -= base * base * term.multiplier.rational();
    } else {
      facts.push_back(find_fact(std::get<FactTerm>(term.body).name));
    }
  }
  Eigen::MatrixXd m(4, static_cast<Eigen::Index>(facts.size()));
  for (std::size_t j = 0; j < facts.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = w_coords(facts[j]->polynomial);
  const Eigen::VectorXd sol = m.colPivHouseholderQr().solve(w_coords(rest));
  return {sol.data(), sol.data() + sol.size()};
}

void expect_multipliers(const Certificate& cert, const std::vector<Rational>& expected) {
  EXPECT_EQ(fact_multipliers(cert), expected);
  const auto oracle = solve_multipliers(cert);
  ASSERT_EQ(oracle.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(oracle[i], to_double(expected[i]), 1e-9);
}

// X^2 + Y^2 + Z^2 + k(XY + YZ + ZX) for the (X, Y, Z) of parameter t.
MultiPoly xyz_form(const Rational& a, const Rational& t) {
  const auto s = pqk(a, t);
  const auto [px, py, pz] = xyz_polys(s.p, s.q);
  MultiPoly out = px * px + py * py + pz * pz;
  if (s.k) out += (px * py + py * pz + pz * px) * *s.k;
  return out;
}

// 1/2 sum over cyclic (x, y, z) of (x - y)^2 (x + y + a z)^2
MultiPoly pair_square_form(const Rational& a) {
  const MultiPoly s1 = (X() - Y()) * (X() + Y() + Z() * a);
  const MultiPoly s2 = (Y() - Z()) * (Y() + Z() + X() * a);
  const MultiPoly s3 = (Z() - X()) * (Z() + X() + Y() * a);
  return (s1 * s1 + s2 * s2 + s3 * s3) * Rational(1, 2);
}

}  // namespace

TEST(Catalog, WitnessesExpandExactly) {
  for (const auto& fact : catalog()) {
    ASSERT_NE(find_fact(fact.name), nullptr);
    EXPECT_TRUE(fact.polynomial.is_symmetric()) << fact.name;
    if (fact.witness) {
      EXPECT_EQ(expand(*fact.witness), fact.polynomial) << fact.name;
      for (const auto& sq : *fact.witness) EXPECT_GT(sq.coefficient, 0) << fact.name;
    } else {
      ASSERT_TRUE(fact.spot_check) << fact.name;
      EXPECT_EQ(fact.spot_check->samples, 100000u);
      EXPECT_GE(fact.spot_check->min_value, -1e-12) << fact.name;
      EXPECT_EQ(fact.validity, Domain::NonnegativeOrthant);
    }
  }
  for (const char* name : {"2w4-w3", "w4-w2", "w2", "w2-w1", "w2+2w1", "w1", "w3-2w2", "schur"}) {
    EXPECT_NE(find_fact(name), nullptr) << name;
  }
  EXPECT_EQ(find_fact("w4"), nullptr);
}

TEST(Catalog, NamedExpansions) {
  const MultiPoly s = X() * Y() + Y() * Z() + Z() * X();
  EXPECT_EQ(find_fact("w2+2w1")->polynomial, s * s);
  const Rational one(1), zero(0);
  EXPECT_EQ(find_fact("schur")->polynomial.eval(one, one, zero), 0);
  EXPECT_EQ(find_fact("schur")->polynomial.eval(one, one, one), 0);
}

TEST(Catalog, DomainCover) {
  EXPECT_TRUE(covers(Domain::Reals, Domain::NonnegativeOrthant));
  EXPECT_TRUE(covers(Domain::Reals, Domain::Reals));
  EXPECT_FALSE(covers(Domain::NonnegativeOrthant, Domain::Reals));
}

TEST(CertificateKind, NamesRoundTrip) {
  for (auto k : {CertificateKind::UVIdentity, CertificateKind::XYZIdentity, CertificateKind::SchurConic,
                 CertificateKind::Theorem2Combo}) {
    EXPECT_EQ(parse_certificate_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_certificate_kind("sos"), std::invalid_argument);
}

TEST(CertUV, Multipliers) {
  expect_multipliers(cert_theorem1(-1, 0, 1), {0, 0});
  expect_multipliers(cert_theorem1(0, 1, -2), {0, 2});
  expect_multipliers(cert_theorem1(-1, 1, 0), {0, 1});
  EXPECT_TRUE(verify(cert_theorem1(-1, 1, 0), form(-1, 1, 0)).valid());
  EXPECT_THROW(cert_theorem1(0, 0, 1), PreconditionError);
  EXPECT_THROW(cert_theorem1(0, -2, -2), PreconditionError);
}

TEST(CertMinusHalf, Multipliers) {
  const Rational m(-1, 2);
  const Certificate boundary = cert_theorem2(Rational(-3, 4), Rational(3, 4));
  for (const auto& x : fact_multipliers(boundary)) EXPECT_EQ(x, 0);
  EXPECT_TRUE(verify(boundary, form(m, Rational(-3, 4), Rational(3, 4))).valid());
  expect_multipliers(cert_theorem2(1, 2), {Rational(5, 8), Rational(9, 8)});
  expect_multipliers(cert_theorem2(Rational(5, 2), Rational(19, 4)), {2, Rational(5, 4)});
  EXPECT_EQ(cert_theorem2(1, 2).kind, CertificateKind::Theorem2Combo);
  EXPECT_EQ(cert_theorem2(1, 0).kind, CertificateKind::UVIdentity);
  EXPECT_THROW(cert_theorem2(-1, 0), PreconditionError);
  EXPECT_THROW(cert_theorem2(0, 4), PreconditionError);
}

TEST(CertSchur, Multipliers) {
  expect_multipliers(cert_schur_nonneg(-1, 0, 1), {1, 0, 0, 0});
  expect_multipliers(cert_schur_nonneg(0, -2, 1), {1, 1, 0, 0});
  expect_multipliers(cert_schur_nonneg(1, 0, 0), {1, 2, 4, 3});
  EXPECT_EQ(fact_names(cert_schur_nonneg(1, 0, 0)), (std::vector<std::string>{"schur", "w3-2w2", "w2-w1", "w1"}));
  EXPECT_THROW(cert_schur_nonneg(-2, 10, 10), PreconditionError);
}

TEST(CertXyz, WorkedInstances) {
  const Rational a(2);
  const Certificate one = cert_xyz(a, AlgebraicNumber(Rational(-1)), 3, 8);
  EXPECT_TRUE(verify(one, form(2, 3, 8)).valid());
  const Verification perturbed = verify(one, form(2, 3, 7));
  EXPECT_EQ(perturbed.status, Verification::Status::ResidualNonzero);
  EXPECT_TRUE(verify(cert_xyz(a, AlgebraicNumber(Rational(-3)), 3, -8), form(2, 3, -8)).valid());

  // k = 0 at t = -1: three squares of (x+y)(x+z) and its images.
  const MultiPoly xx = (X() + Y()) * (X() + Z());
  const MultiPoly yy = (Y() + Z()) * (Y() + X());
  const MultiPoly zz = (Z() + X()) * (Z() + Y());
  EXPECT_EQ(expand(form(2, 3, 8)), xx * xx + yy * yy + zz * zz);
  // k = -1 at t = -3: half the sum of squared differences.
  EXPECT_EQ(expand(form(2, 3, -8)), pair_square_form(2));

  const Rational q(19, 4);
  EXPECT_TRUE(verify(cert_xyz(q, AlgebraicNumber(Rational(-1)), Rational(17, 2), 19), form(q, Rational(17, 2), 19)).valid());
  EXPECT_TRUE(verify(cert_xyz(q, AlgebraicNumber(Rational(-4)), Rational(17, 2), Rational(49, 4)),
                     form(q, Rational(17, 2), Rational(49, 4)))
                  .valid());
  const Certificate degenerate = cert_xyz(-2, AlgebraicNumber(Rational(1)), 3, 0);
  EXPECT_EQ(degenerate.terms.size(), 2u);
  EXPECT_TRUE(verify(degenerate, form(-2, 3, 0)).valid());
}

TEST(CertXyz, Preconditions) {
  EXPECT_THROW(cert_xyz(2, AlgebraicNumber(Rational(0)), 0, 0), PreconditionError);
  EXPECT_THROW(cert_xyz(2, AlgebraicNumber(Rational(-1)), 3, 9), PreconditionError);
  EXPECT_THROW(cert_xyz(2, AlgebraicNumber(Rational(-1)), 2, 8), PreconditionError);
}

TEST(CertXyz, BranchPointsGiveOneSquare) {
  for (int a : {6, -4, 5, -3}) {
    const Rational ar(a);
    const Rational b = ar * ar / 4 + 2;
    const Rational c = ar * ar / 2 + ar;
    const MultiPoly s = X() * X() + Y() * Y() + Z() * Z() + (X() * Y() + Y() * Z() + Z() * X()) * (ar / 2);
    EXPECT_EQ(expand(form(a, b, c)), s * s);
    const auto bp = *branch_points(ar);
    for (const auto& t : {bp.t1, bp.t2}) {
      const Certificate cert = cert_xyz(ar, t, b, c);
      EXPECT_TRUE(verify(cert, form(a, b, c)).valid()) << a;
    }
  }
}

TEST(ClosedFormIdentities, ParameterMinusTwo) {
  RationalGen gen(40);
  for (int i = 0; i < 10; ++i) {
    const Rational a = gen.in(Rational(1), Rational(4));
    EXPECT_EQ(b_of_t(a, -2), 2 * (a - 1));
    EXPECT_EQ(c_of_t(a, -2), 5 * a - 8);
    const MultiPoly s = X() + Y() + Z();
    const MultiPoly rhs = s * s * (X() * X() + Y() * Y() + Z() * Z() + (X() * Y() + Y() * Z() + Z() * X()) * (a - 2));
    EXPECT_EQ(expand(form(a, 2 * (a - 1), 5 * a - 8)), rhs);
    EXPECT_EQ(xyz_form(a, -2), rhs);
  }
}

TEST(ClosedFormIdentities, ParameterMinusOne) {
  RationalGen gen(41);
  for (int i = 0; i < 10; ++i) {
    const Rational a = gen.in(Rational(0), Rational(6));
    EXPECT_EQ(*pqk(a, Rational(-1)).k, a / 2 - 1);
    EXPECT_EQ(expand(form(a, 2 * a - 1, 4 * a)), xyz_form(a, -1));
  }
}

TEST(ClosedFormIdentities, ParameterZero) {
  RationalGen gen(42);
  for (int i = 0; i < 10; ++i) {
    const Rational a = gen.in(Rational(-4), Rational(-1));
    EXPECT_EQ(*pqk(a, Rational(0)).k, -a - 2);
    EXPECT_EQ(expand(form(a, -2 * (a + 1), -a)), xyz_form(a, 0));
  }
}

TEST(Identities, UVAndPairSquareForm) {
  RationalGen gen(43);
  for (int i = 0; i < 20; ++i) {
    const Rational a = gen.in(Rational(-10), Rational(10));
    const MultiPoly u = uv_u(a), v = uv_v(a);
    const MultiPoly lhs = expand(form(a, a * a - 1, -a * a - 2 * a));
    EXPECT_EQ(lhs, u * u + v * v - u * v);
    EXPECT_EQ(lhs, pair_square_form(a));
  }
}

TEST(Identities, XYZForRandomParameters) {
  RationalGen gen(44);
  int checked = 0;
  for (const auto& range : symquartic::testing::real_case_ranges()) {
    for (int i = 0; i < 13; ++i) {
      const Rational a = gen.open(range.lo, range.hi);
      const auto cases = case_intervals(a, Section::RealCase);
      const auto ts = symquartic::testing::grid(cases.intervals[static_cast<std::size_t>(i) % cases.intervals.size()], 9);
      const Rational& t = ts[static_cast<std::size_t>(gen.integer(0, static_cast<long>(ts.size()) - 1))];
      EXPECT_EQ(expand(form(a, b_of_t(a, t), c_of_t(a, t))), xyz_form(a, t)) << range.label << " a=" << a << " t=" << t;
      ++checked;
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(Identities, KSplit) {
  // Symbolic X, Y, Z are the variables x, y, z themselves.
  RationalGen gen(45);
  for (int i = 0; i < 20; ++i) {
    const Rational k = gen.in(Rational(-1), Rational(2));
    const MultiPoly s = X() + Y() + Z();
    const MultiPoly dxy = X() - Y(), dyz = Y() - Z(), dzx = Z() - X();
    const MultiPoly split = s * s * ((k + 1) / 3) + (dxy * dxy + dyz * dyz + dzx * dzx) * ((2 - k) / 6);
    EXPECT_EQ(split, X() * X() + Y() * Y() + Z() * Z() + (X() * Y() + Y() * Z() + Z() * X()) * k);
  }
}

TEST(Identities, DegenerateParameterOne) {
  const MultiPoly dx = Y() - Z(), dy = X() - Z(), dz = X() - Y();
  const WBasis& w = w_basis();
  EXPECT_EQ((w.w4 - w.w3 * Rational(2) + w.w2 * Rational(3)) * Rational(2), dx.pow(4) + dy.pow(4) + dz.pow(4));
  EXPECT_EQ(expand(form(-2, 3, 0)), xyz_form(-2, 1));
}

TEST(Verify, RejectsTamperedCertificates) {
  Certificate cert = cert_schur_nonneg(1, 0, 0);
  EXPECT_TRUE(verify(cert, form(1, 0, 0, Domain::NonnegativeOrthant)).valid());
  EXPECT_EQ(verify(cert, form(1, 0, 0, Domain::Reals)).status, Verification::Status::DomainMismatch);

  Certificate negative = cert;
  negative.terms[1].multiplier = Rational(-1);
  EXPECT_EQ(verify(negative, form(1, 0, 0, Domain::NonnegativeOrthant)).status,
            Verification::Status::NegativeMultiplier);

  Certificate unknown = cert;
  unknown.terms[0].body = FactTerm{"w0"};
  EXPECT_EQ(verify(unknown, form(1, 0, 0, Domain::NonnegativeOrthant)).status, Verification::Status::UnknownFact);

  // An orthant-only fact smuggled into a real certificate.
  Certificate smuggled = cert_theorem1(0, 1, -2);
  smuggled.terms.push_back({Rational(0), FactTerm{"w1"}});
  EXPECT_EQ(verify(smuggled, form(0, 1, -2)).status, Verification::Status::DomainMismatch);
}

TEST(Verify, AlgebraicMultiplierSigns) {
  const AlgebraicNumber t = invert_c(2, 4);
  const FieldElem bt = b_of_t(2, FieldElem::embed(t));
  const Rational above = bt.approx(Rational(1, 1000000)) + Rational(1, 1000);
  Certificate cert = cert_xyz(2, t, above, 4);
  EXPECT_TRUE(verify(cert, form(2, above, 4)).valid());
  Certificate flipped = cert;
  for (auto& term : flipped.terms) {
    if (std::holds_alternative<SquareTerm>(term.body)) {
      term.multiplier = -term.multiplier;
      break;
    }
  }
  EXPECT_EQ(verify(flipped, form(2, above, 4)).status, Verification::Status::NegativeMultiplier);
  EXPECT_THROW(cert_xyz(2, t, above - Rational(1, 100), 4), PreconditionError);
}

TEST(RoundTrip, UVRealRegion) {
  RationalGen gen(50);
  for (int i = 0; i < 50; ++i) {
    const Rational a = gen.in(Rational(-8), Rational(8));
    const Rational c = -a * a - 2 * a - gen.in(Rational(0), Rational(10));
    const Rational b = -2 * a - c - 1 + gen.in(Rational(0), Rational(10));
    EXPECT_TRUE(verify(cert_theorem1(a, b, c), form(a, b, c)).valid());
  }
}

TEST(RoundTrip, MinusHalfRegion) {
  RationalGen gen(51);
  for (int i = 0; i < 50; ++i) {
    const Rational c = gen.in(Rational(-10), Rational(10));
    const Rational b = std::max<Rational>(-c, c / 2 - Rational(9, 8)) + gen.in(Rational(0), Rational(5));
    EXPECT_TRUE(verify(cert_theorem2(b, c), form(Rational(-1, 2), b, c)).valid());
  }
}

TEST(RoundTrip, SchurRegion) {
  RationalGen gen(52);
  for (int i = 0; i < 50; ++i) {
    const Rational a = gen.in(Rational(-1), Rational(8));
    const Rational b = -2 * (a + 1) + gen.in(Rational(0), Rational(10));
    const Rational c = -2 * a - b - 1 + gen.in(Rational(0), Rational(10));
    EXPECT_TRUE(verify(cert_schur_nonneg(a, b, c), form(a, b, c, Domain::NonnegativeOrthant)).valid());
  }
}

TEST(RoundTrip, UVOrthantRegion) {
  RationalGen gen(53);
  for (int i = 0; i < 50; ++i) {
    const Rational a = gen.in(Rational(-8), Rational(-1));
    const Rational b = a * a - 1 + gen.in(Rational(0), Rational(10));
    const Rational c = -2 * a - b - 1 + gen.in(Rational(0), Rational(10));
    EXPECT_TRUE(verify(cert_uv_nonneg(a, b, c), form(a, b, c, Domain::NonnegativeOrthant)).valid());
  }
}

TEST(RoundTrip, XYZRealRegion) {
  RationalGen gen(54);
  for (int i = 0; i < 50; ++i) {
    const auto range = symquartic::testing::real_case_ranges()[static_cast<std::size_t>(i % 4)];
    const Rational a = gen.open(range.lo, range.hi);
    const Rational c = -a * a - 2 * a + gen.in(Rational(0), Rational(30));
    const AlgebraicNumber t = invert_c(a, c);
    const Rational b = b_of_t(a, FieldElem::embed(t)).approx(Rational(1, 1000000)) + gen.in(Rational(1, 100), Rational(5));
    EXPECT_TRUE(verify(cert_xyz(a, t, b, c), form(a, b, c)).valid()) << a << " " << b << " " << c;
  }
}

TEST(RoundTrip, XYZOrthantRegion) {
  RationalGen gen(55);
  for (int i = 0; i < 50; ++i) {
    const auto range = symquartic::testing::nonneg_case_ranges()[static_cast<std::size_t>(i % 3)];
    const Rational a = gen.open(range.lo, range.hi);
    const Rational b = gen.in(nonneg_b_lower(a), a * a - 1);
    const AlgebraicNumber t = invert_b(a, b);
    const Rational c = c_of_t(a, FieldElem::embed(t)).approx(Rational(1, 1000000)) + gen.in(Rational(1, 100), Rational(5));
    const QuarticForm f = form(a, b, c, Domain::NonnegativeOrthant);
    EXPECT_TRUE(verify(cert_xyz(a, t, b, c, Domain::NonnegativeOrthant), f).valid()) << a << " " << b << " " << c;
  }
}

TEST(CertificateFor, CoversEveryHoldingRegion) {
  EXPECT_EQ(certificate_for(form(-1, 0, 1, Domain::NonnegativeOrthant))->kind, CertificateKind::SchurConic);
  EXPECT_EQ(certificate_for(form(0, 1, -2))->kind, CertificateKind::UVIdentity);
  EXPECT_EQ(certificate_for(form(Rational(-1, 2), 1, 2))->kind, CertificateKind::Theorem2Combo);
  EXPECT_EQ(certificate_for(form(2, 3, 8))->kind, CertificateKind::XYZIdentity);
  EXPECT_EQ(certificate_for(form(-4, 16, 0, Domain::NonnegativeOrthant))->kind, CertificateKind::UVIdentity);
  EXPECT_FALSE(certificate_for(form(0, 0, -4)));
  EXPECT_FALSE(certificate_for(form(2, Rational(209, 100), 4)));
}
