#include "symquartic/algebraic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "symquartic/factor.hpp"

namespace symquartic {
namespace {

UniPoly linear_for(const Rational& r) {
  return UniPoly({Rational(-r.get_num()), Rational(r.get_den())});
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& value) : defining_(linear_for(value)), lo_(value), hi_(value) {}

AlgebraicNumber::AlgebraicNumber(UniPoly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {}

AlgebraicNumber AlgebraicNumber::from_root(const UniPoly& p, const RootInterval& interval) {
  if (interval.exact()) {
    if (sgn(p(interval.lo)) != 0) throw std::invalid_argument("from_root: exact interval is not a root");
    return AlgebraicNumber(interval.lo);
  }
  for (auto& factor : irreducible_factors(p)) {
    if (sturm_root_count(factor, interval.lo, interval.hi) == 0) continue;
    if (factor.degree() == 1) return AlgebraicNumber(Rational(-factor.coeff(0) / factor.coeff(1)));
    return AlgebraicNumber(std::move(factor), interval.lo, interval.hi);
  }
  throw std::invalid_argument("from_root: no root of the polynomial inside the interval");
}

std::vector<AlgebraicNumber> AlgebraicNumber::real_roots(const UniPoly& p, const Bound& lo, const Bound& hi,
                                                         const StepBudget& budget) {
  std::vector<AlgebraicNumber> out;
  for (auto& factor : irreducible_factors(p)) {
    for (auto& iv : isolate_roots(factor, lo, hi, budget)) {
      if (factor.degree() == 1) {
        out.emplace_back(Rational(-factor.coeff(0) / factor.coeff(1)));
      } else {
        out.push_back(AlgebraicNumber(factor, std::move(iv.lo), std::move(iv.hi)));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
  return out;
}

const Rational& AlgebraicNumber::rational() const {
  if (!is_rational()) throw std::logic_error("algebraic number is irrational");
  return lo_;
}

Rational AlgebraicNumber::approx(const Rational& eps, const StepBudget& budget) const {
  if (is_rational()) return lo_;
  if (sgn(eps) <= 0) throw std::invalid_argument("approx: eps must be positive");
  return refine_interval(defining_, {lo_, hi_}, 2 * eps, budget).midpoint();
}

AlgebraicNumber AlgebraicNumber::narrowed(const Rational& width, const StepBudget& budget) const {
  if (is_rational()) return *this;
  RootInterval iv = refine_interval(defining_, {lo_, hi_}, width, budget);
  return AlgebraicNumber(defining_, std::move(iv.lo), std::move(iv.hi));
}

double AlgebraicNumber::to_double() const { return approx(Rational(1, 1UL << 60)).get_d(); }

int AlgebraicNumber::sign_of(const UniPoly& q) const {
  if (is_rational()) return sgn(q(lo_));
  const UniPoly r = divmod(q, defining_).remainder;
  // The defining polynomial is irreducible, so r vanishes at the root iff r == 0.
  if (r.is_zero()) return 0;
  RootInterval iv{lo_, hi_};
  while (sgn(r(iv.lo)) == 0 || sturm_root_count(r, iv.lo, iv.hi) != 0) {
    iv = refine_interval(defining_, iv, (iv.hi - iv.lo) / 4);
  }
  return sgn(r(iv.lo));
}

int AlgebraicNumber::compare_rational(const Rational& r) const {
  if (is_rational()) return sgn(lo_ - r);
  RootInterval iv{lo_, hi_};
  while (iv.lo < r && r < iv.hi) iv = refine_interval(defining_, iv, (iv.hi - iv.lo) / 2);
  return r <= iv.lo ? 1 : -1;
}

int compare(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs) {
  if (rhs.is_rational()) return lhs.compare_rational(rhs.lo_);
  if (lhs.is_rational()) return -rhs.compare_rational(lhs.lo_);
  RootInterval a{lhs.lo_, lhs.hi_};
  RootInterval b{rhs.lo_, rhs.hi_};
  const Rational overlap_lo = a.lo > b.lo ? a.lo : b.lo;
  const Rational overlap_hi = a.hi < b.hi ? a.hi : b.hi;
  if (overlap_lo < overlap_hi) {
    // Common root test: a shared factor with a root in the overlap is the same number.
    const UniPoly g = gcd(lhs.defining_, rhs.defining_);
    if (g.degree() > 0 && sturm_root_count(g, overlap_lo, overlap_hi) > 0) return 0;
  }
  while (!(a.hi <= b.lo || b.hi <= a.lo)) {
    a = refine_interval(lhs.defining_, a, (a.hi - a.lo) / 2);
    b = refine_interval(rhs.defining_, b, (b.hi - b.lo) / 2);
  }
  return a.hi <= b.lo ? -1 : 1;
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return symquartic::to_string(lo_);
  std::ostringstream os;
  os << "root of " << defining_.to_string() << " in (" << symquartic::to_string(lo_) << ", "
     << symquartic::to_string(hi_) << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x) { return os << x.to_string(); }

}  // namespace symquartic
