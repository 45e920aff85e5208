#include "symquartic/nonneg.hpp"

#include <vector>

namespace symquartic {
namespace {

// Simplest rational strictly below x.
Rational simplest_below(const Rational& x) {
  if (sgn(x) > 0) return Rational(0);
  const Integer f = floor(x);
  return Rational(Rational(f) == x ? Integer(f - 1) : f);
}

Rational simplest_above(const Rational& x) { return Rational(-simplest_below(Rational(-x))); }

bool simpler(const Rational& a, const Rational& b) {
  if (a.get_den() != b.get_den()) return a.get_den() < b.get_den();
  return abs(a.get_num()) < abs(b.get_num());
}

struct Gap {
  Bound lo, hi;
  Rational sample;
};

}  // namespace

NonnegVerdict univariate_nonneg(const UniPoly& p, HalfLine domain) {
  NonnegVerdict verdict;
  if (p.is_zero()) return verdict;
  const bool halfline = domain == HalfLine::Nonnegative;
  std::vector<RootInterval> roots = isolate_roots(p, halfline ? Bound(Rational(0)) : std::nullopt, std::nullopt);
  const UniPoly q = squarefree_part(p);
  // Narrow brackets so that the gap samples are as simple as the true gaps allow.
  for (auto& iv : roots) {
    const Rational scale = 1 + abs(iv.lo) + abs(iv.hi);
    iv = refine_interval(q, iv, scale / Rational(1 << 20));
  }

  std::vector<Gap> gaps;
  if (roots.empty()) {
    if (halfline) {
      gaps.push_back({Rational(0), std::nullopt, Rational(0)});
      gaps.push_back({Rational(0), std::nullopt, Rational(1)});
    } else {
      gaps.push_back({std::nullopt, std::nullopt, Rational(0)});
    }
  } else {
    if (halfline) {
      gaps.push_back({Rational(0), roots.front().lo, Rational(0)});
      if (sgn(roots.front().lo) > 0) {
        gaps.push_back({Rational(0), roots.front().lo, simplest_between(Rational(0), roots.front().lo)});
      }
    } else {
      gaps.push_back({std::nullopt, roots.front().lo, simplest_below(roots.front().lo)});
    }
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      const Rational& lo = roots[i].hi;
      const Rational& hi = roots[i + 1].lo;
      gaps.push_back({lo, hi, lo < hi ? simplest_between(lo, hi) : lo});
    }
    gaps.push_back({roots.back().hi, std::nullopt, simplest_above(roots.back().hi)});
  }

  for (const auto& gap : gaps) {
    if (sgn(p(gap.sample)) >= 0) continue;
    if (!verdict.witness || simpler(gap.sample, *verdict.witness)) {
      verdict.nonneg = false;
      verdict.witness = gap.sample;
      verdict.witness_lo = gap.lo;
      verdict.witness_hi = gap.hi;
    }
  }
  return verdict;
}

}  // namespace symquartic
