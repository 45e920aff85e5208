#include "symquartic/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace symquartic {
namespace {

// Integral-domain operations the subresultant algorithm needs.
template <class R>
struct Ring;

template <>
struct Ring<Rational> {
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational one() { return Rational(1); }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct Ring<UniPoly> {
  static bool is_zero(const UniPoly& a) { return a.is_zero(); }
  static UniPoly one() { return UniPoly::constant(Rational(1)); }
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("subresultant: inexact division");
    return q;
  }
};

template <class R>
using Poly = std::vector<R>;

template <class R>
void trim(Poly<R>& a) {
  while (!a.empty() && Ring<R>::is_zero(a.back())) a.pop_back();
}

template <class R>
int deg(const Poly<R>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
R power(const R& base, int exponent) {
  R result = Ring<R>::one();
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

// lc(B)^(deg A - deg B + 1) * A mod B, computed without fractions in R.
template <class R>
Poly<R> pseudo_remainder(Poly<R> a, const Poly<R>& b) {
  const int db = deg(b);
  const R& lb = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const R lr = a.back();
    const int shift = deg(a) - db;
    for (auto& c : a) c = lb * c;
    for (int j = 0; j <= db; ++j) {
      a[static_cast<std::size_t>(shift + j)] = a[static_cast<std::size_t>(shift + j)] - lr * b[static_cast<std::size_t>(j)];
    }
    trim(a);
    --e;
  }
  const R scale = power(lb, e);
  for (auto& c : a) c = scale * c;
  return a;
}

template <class R>
R subresultant(Poly<R> a, Poly<R> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return R();
  int s = 1;
  if (deg(a) < deg(b)) {
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) s = -1;
    std::swap(a, b);
  }
  if (deg(b) == 0) return power(b.front(), deg(a));
  R g = Ring<R>::one();
  R h = Ring<R>::one();
  for (;;) {
    const int delta = deg(a) - deg(b);
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) s = -s;
    Poly<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return R();
    const R divisor = g * power(h, delta);
    for (auto& c : r) c = Ring<R>::exact_div(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = Ring<R>::exact_div(power(g, delta), power(h, delta - 1));
    }
    if (deg(b) == 0) {
      R result = Ring<R>::exact_div(power(b.back(), deg(a)), power(h, deg(a) - 1));
      return s < 0 ? R(-result) : result;
    }
  }
}

}  // namespace

BiPoly lift_t(const UniPoly& t_poly) {
  BiPoly out;
  for (const auto& c : t_poly.coefficients()) out.push_back(UniPoly::constant(c));
  return out;
}

UniPoly resultant(const BiPoly& p, const BiPoly& q) { return subresultant<UniPoly>(p, q); }

Rational resultant(const UniPoly& p, const UniPoly& q) {
  return subresultant<Rational>(p.coefficients(), q.coefficients());
}

}  // namespace symquartic
