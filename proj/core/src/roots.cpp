#include "symquartic/roots.hpp"

#include <algorithm>
#include <utility>

namespace symquartic {
namespace {

int sign_at_infinity(const UniPoly& p, bool plus) {
  const int s = sgn(p.leading());
  if (plus || p.degree() % 2 == 0) return s;
  return -s;
}

// Sturm count of distinct roots in the open interval (lo, hi), lo < hi finite.
std::size_t count_open(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
  const int vlo = sign_variations(chain, lo, false);
  const int vhi = sign_variations(chain, hi, true);
  std::size_t count = static_cast<std::size_t>(vlo - vhi);
  if (sgn(chain.front()(hi)) == 0) --count;
  return count;
}

}  // namespace

Rational cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_bound of zero polynomial");
  Rational max_ratio(0);
  const Rational lead = symquartic::abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = symquartic::abs(p.coeff(i)) / lead;
    if (r > max_ratio) max_ratio = r;
  }
  // Round up to an integer to keep bisection midpoints small.
  return Rational(floor(max_ratio) + 2);
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of zero polynomial");
  std::vector<UniPoly> chain{p};
  UniPoly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    next = -divmod(a, chain.back()).remainder;
  }
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Bound& x, bool at_plus_inf) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = x ? sgn(q(*x)) : sign_at_infinity(q, at_plus_inf);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

std::size_t sturm_root_count(const UniPoly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_root_count of zero polynomial");
  if (p.degree() == 0) return 0;
  if (lo && hi && !(*lo < *hi)) return 0;
  const auto chain = sturm_sequence(squarefree_part(p));
  const int vlo = sign_variations(chain, lo, false);
  const int vhi = sign_variations(chain, hi, true);
  return static_cast<std::size_t>(std::max(0, vlo - vhi));
}

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Bound& lo, const Bound& hi, const StepBudget& budget) {
  std::vector<RootInterval> roots;
  if (p.degree() <= 0) return roots;
  const UniPoly q = squarefree_part(p);
  const Rational bound = cauchy_bound(q);
  Rational left = lo ? *lo : Rational(-bound);
  Rational right = hi ? *hi : bound;
  if (!(left < right)) return roots;
  const auto chain = sturm_sequence(q);

  std::size_t used = 0;
  struct Pending {
    Rational lo, hi;
    std::size_t count;
  };
  std::vector<Pending> work{{left, right, count_open(chain, left, right)}};
  while (!work.empty()) {
    Pending cur = std::move(work.back());
    work.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1 && sgn(q(cur.lo)) != 0 && sgn(q(cur.hi)) != 0) {
      roots.push_back({cur.lo, cur.hi});
      continue;
    }
    budget.spend(used);
    Rational mid = (cur.lo + cur.hi) / 2;
    if (sgn(q(mid)) == 0) {
      roots.push_back({mid, mid});
      std::size_t left_count = count_open(chain, cur.lo, mid);
      work.push_back({cur.lo, mid, left_count});
      work.push_back({mid, cur.hi, cur.count - 1 - left_count});
    } else {
      std::size_t left_count = count_open(chain, cur.lo, mid);
      work.push_back({cur.lo, mid, left_count});
      work.push_back({mid, cur.hi, cur.count - left_count});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return roots;
}

RootInterval refine_interval(const UniPoly& squarefree, RootInterval interval, const Rational& width,
                             const StepBudget& budget) {
  if (interval.exact()) return interval;
  std::size_t used = 0;
  int slo = sgn(squarefree(interval.lo));
  while (interval.hi - interval.lo > width) {
    budget.spend(used);
    Rational mid = interval.midpoint();
    const int smid = sgn(squarefree(mid));
    if (smid == 0) return {mid, mid};
    if (smid == slo) {
      interval.lo = std::move(mid);
    } else {
      interval.hi = std::move(mid);
    }
  }
  return interval;
}

}  // namespace symquartic
