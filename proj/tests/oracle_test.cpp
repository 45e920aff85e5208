#include <gtest/gtest.h>

#include <cmath>

#include "symquartic/decide.hpp"
#include "symquartic/oracle.hpp"
#include "test_support.hpp"

using namespace symquartic;
using symquartic::testing::RationalGen;

namespace {

QuarticForm form(const Rational& a, const Rational& b, const Rational& c, Domain d = Domain::Reals) {
  return {a, b, c, d};
}

double feval(const QuarticForm& f, const std::array<double, 3>& p) {
  return to_double(eval(f, rationalize(p[0], 1000000000), rationalize(p[1], 1000000000), rationalize(p[2], 1000000000)));
}

}  // namespace

TEST(NumericMin, Examples) {
  const OracleReport zero = numeric_min(form(0, 0, 0));
  EXPECT_NEAR(zero.min_estimate, 1.0, 1e-9);
  EXPECT_EQ(zero.hint, Hint::LikelyHolds);

  const OracleReport schur = numeric_min(form(-1, 0, 1, Domain::NonnegativeOrthant));
  EXPECT_NEAR(schur.min_estimate, 0.0, 1e-9);
  EXPECT_EQ(schur.hint, Hint::LikelyHolds);

  const OracleReport golden = numeric_min(form(2, parse_rational("2.0901699"), 4));
  EXPECT_NEAR(golden.min_estimate, 0.0, 1e-6);
  const auto& g = golden.argmin;
  // Two coordinates agree and the third is -1.618 times them, up to order and sign.
  std::array<double, 3> s{std::fabs(g[0]), std::fabs(g[1]), std::fabs(g[2])};
  std::sort(s.begin(), s.end());
  EXPECT_NEAR(s[1], s[0], 1e-3);
  EXPECT_NEAR(s[2] / s[0], (1 + std::sqrt(5.0)) / 2, 1e-3);

  const OracleReport bad = numeric_min(form(0, 0, -4));
  EXPECT_LT(bad.min_estimate, 0.0);
  EXPECT_EQ(bad.hint, Hint::LikelyFails);

  EXPECT_NEAR(numeric_min(form(2, 3, 8)).min_estimate, 0.0, 1e-9);
}

TEST(NumericMin, ArgminRespectsDomainAndValue) {
  RationalGen gen(70);
  for (int i = 0; i < 40; ++i) {
    const Domain d = i % 2 ? Domain::Reals : Domain::NonnegativeOrthant;
    const QuarticForm f = form(gen.in(Rational(-5), Rational(5)), gen.in(Rational(-5), Rational(5)),
                               gen.in(Rational(-5), Rational(5)), d);
    const OracleReport r = numeric_min(f, {2000, 3});
    const auto& p = r.argmin;
    EXPECT_NEAR(std::max({std::fabs(p[0]), std::fabs(p[1]), std::fabs(p[2])}), 1.0, 1e-12);
    if (d == Domain::NonnegativeOrthant) {
      for (double x : p) EXPECT_GE(x, 0.0);
    }
    EXPECT_NEAR(r.min_estimate, feval(f, p), 1e-6 * (1 + std::fabs(r.min_estimate)));
    EXPECT_GE(r.samples, 2000u);
  }
}

TEST(NumericMin, DeterministicForSeed) {
  const QuarticForm f = form(Rational(3, 2), Rational(-1, 3), 2);
  const OracleReport a = numeric_min(f, {5000, 11});
  const OracleReport b = numeric_min(f, {5000, 11});
  EXPECT_EQ(a.min_estimate, b.min_estimate);
  EXPECT_EQ(a.argmin, b.argmin);
  EXPECT_EQ(a.samples, b.samples);
}

TEST(FindCounterexample, Examples) {
  const auto p = find_counterexample(form(0, 0, -4));
  ASSERT_TRUE(p);
  const std::array<Rational, 3> ones{Rational(1), Rational(1), Rational(1)};
  EXPECT_EQ(*p, ones);
  EXPECT_EQ(eval(form(0, 0, -4), (*p)[0], (*p)[1], (*p)[2]), -9);

  const QuarticForm below = form(2, parse_rational("2.08"), 4);
  const auto q = find_counterexample(below);
  ASSERT_TRUE(q);
  EXPECT_LT(sgn(eval(below, (*q)[0], (*q)[1], (*q)[2])), 0);

  EXPECT_FALSE(find_counterexample(form(-1, 0, 1, Domain::NonnegativeOrthant)));
  EXPECT_FALSE(find_counterexample(form(0, 0, 0)));
}

TEST(FindCounterexample, NeverAccusesFalsely) {
  RationalGen gen(71);
  int found = 0;
  for (int i = 0; i < 100; ++i) {
    const Domain d = i % 2 ? Domain::Reals : Domain::NonnegativeOrthant;
    const QuarticForm f = form(gen.in(Rational(-6), Rational(6)), gen.in(Rational(-6), Rational(6)),
                               gen.in(Rational(-6), Rational(6)), d);
    const auto p = find_counterexample(f, {1000, static_cast<std::uint64_t>(i)});
    if (!p) continue;
    ++found;
    EXPECT_LT(sgn(eval(f, (*p)[0], (*p)[1], (*p)[2])), 0);
    EXPECT_FALSE(decide(f, {false}).holds);
    if (d == Domain::NonnegativeOrthant) {
      for (const auto& x : *p) EXPECT_GE(sgn(x), 0);
    }
  }
  EXPECT_GT(found, 10);
}

TEST(Tolerance, ScalesWithCoefficients) {
  EXPECT_DOUBLE_EQ(tolerance(form(0, 0, 0)), 1e-9);
  EXPECT_DOUBLE_EQ(tolerance(form(-1, 2, 3)), 7e-9);
  EXPECT_EQ(to_string(Hint::LikelyFails), "likely-fails");
}
