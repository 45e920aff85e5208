#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <unsupported/Eigen/Polynomials>

#include "symquartic/algebraic.hpp"
#include "symquartic/forms.hpp"
#include "symquartic/frontier.hpp"
#include "symquartic/rational.hpp"
#include "symquartic/unipoly.hpp"

namespace symquartic::testing {

/// Deterministic random rationals for property tests.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  /// Uniform-ish rational in [lo, hi] with denominator in [1, max_den].
  Rational in(const Rational& lo, const Rational& hi, long max_den = 64) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng_);
    const Rational span = (hi - lo) * den;
    const Integer steps = floor(span);
    std::uniform_int_distribution<long> num_dist(0, steps.get_si());
    Rational r = lo + Rational(num_dist(rng_), den);
    r.canonicalize();
    return r;
  }

  /// Like in(), but strictly inside (lo, hi).
  Rational open(const Rational& lo, const Rational& hi, long max_den = 64) {
    for (;;) {
      Rational r = in(lo, hi, max_den);
      if (r > lo && r < hi) return r;
    }
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Real roots of p computed in floating point by Eigen (companion matrix).
inline std::vector<double> float_real_roots(const UniPoly& p, double imag_tol = 1e-7) {
  Eigen::VectorXd c(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c[i] = to_double(p.coeff(i));
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
    const std::complex<double> r = solver.roots()[i];
    if (std::fabs(r.imag()) <= imag_tol * (1.0 + std::fabs(r.real()))) out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Polynomial with the given integer roots times a positive leading factor.
inline UniPoly from_roots(const std::vector<Rational>& roots, const Rational& lead = Rational(1)) {
  UniPoly p = UniPoly::constant(lead);
  for (const auto& r : roots) p *= UniPoly({Rational(-r), Rational(1)});
  return p;
}

/// Sample points of the interval [lo, hi], endpoints excluded when open.
inline std::vector<Rational> grid(const TInterval& iv, int n) {
  const Rational lo = iv.lo.is_rational() ? iv.lo.rational() : iv.lo.approx(Rational(1, 1000000));
  const Rational hi = iv.hi.is_rational() ? iv.hi.rational() : iv.hi.approx(Rational(1, 1000000));
  std::vector<Rational> out;
  for (int i = 0; i <= n; ++i) {
    Rational x = lo + (hi - lo) * Rational(i, n);
    x.canonicalize();
    if (iv.contains(AlgebraicNumber(x))) out.push_back(x);
  }
  return out;
}

/// The a-ranges of the real-variable cases: 3.1 .. 3.4, bounded for sampling.
struct CaseRange {
  const char* label;
  Rational lo, hi;
};

inline std::vector<CaseRange> real_case_ranges() {
  return {{"3.1", Rational(-1, 2), Rational(4)},
          {"3.2", Rational(-2), Rational(-1, 2)},
          {"3.3", Rational(4), Rational(12)},
          {"3.4", Rational(-12), Rational(-2)}};
}

inline std::vector<CaseRange> nonneg_case_ranges() {
  return {{"7.1", Rational(-2), Rational(-1)}, {"7.2", Rational(-4), Rational(-2)}, {"7.3", Rational(-12), Rational(-4)}};
}

}  // namespace symquartic::testing
