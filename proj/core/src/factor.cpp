#include "symquartic/factor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace symquartic {
namespace {

// Dense polynomial over Z/pZ, coefficients in [0, p).
using ModPoly = std::vector<Integer>;

class PrimeField {
 public:
  explicit PrimeField(Integer prime) : p_(std::move(prime)) {}
  const Integer& prime() const { return p_; }

  Integer reduce(const Integer& v) const {
    Integer r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return r;
  }
  Integer inverse(const Integer& v) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t()) == 0) throw std::domain_error("non-invertible");
    return r;
  }

  void trim(ModPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ModPoly from(const UniPoly& f) const {
    ModPoly out;
    for (const auto& c : f.coefficients()) {
      assert(c.get_den() == 1);
      out.push_back(reduce(c.get_num()));
    }
    trim(out);
    return out;
  }
  ModPoly sub(ModPoly a, const ModPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = reduce(a[i] - b[i]);
    trim(a);
    return a;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    for (auto& c : out) c = reduce(c);
    trim(out);
    return out;
  }
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    if (a.size() < b.size()) return {{}, a};
    const Integer inv = inverse(b.back());
    const std::size_t shift_max = a.size() - b.size();
    ModPoly q(shift_max + 1, Integer(0));
    for (std::size_t k = shift_max + 1; k-- > 0;) {
      const Integer factor = reduce(a[k + b.size() - 1] * inv);
      q[k] = factor;
      if (factor == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = reduce(a[k + j] - factor * b[j]);
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
  }
  ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    const Integer inv = inverse(a.back());
    for (auto& c : a) c = reduce(c * inv);
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }
  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = reduce(a[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
  }
  ModPoly powmod(ModPoly base, Integer exponent, const ModPoly& modulus) const {
    ModPoly result{Integer(1)};
    base = mod(base, modulus);
    while (exponent > 0) {
      if (mpz_odd_p(exponent.get_mpz_t())) result = mod(mul(result, base), modulus);
      base = mod(mul(base, base), modulus);
      exponent >>= 1;
    }
    return result;
  }

 private:
  Integer p_;
};

int degree(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

// Distinct-degree factorization of a monic squarefree f: pairs (product, d).
std::vector<std::pair<ModPoly, int>> distinct_degree(const PrimeField& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{Integer(0), Integer(1)};
  ModPoly h = x;
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = F.powmod(h, F.prime(), f);
    ModPoly g = F.gcd(F.sub(h, x), f);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting of a monic product of degree-d irreducibles.
void equal_degree(const PrimeField& F, const ModPoly& g, int d, gmp_randclass& rng, std::vector<ModPoly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  Integer exponent;
  mpz_pow_ui(exponent.get_mpz_t(), F.prime().get_mpz_t(), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  for (;;) {
    ModPoly a(static_cast<std::size_t>(degree(g)));
    for (auto& c : a) c = rng.get_z_range(F.prime());
    F.trim(a);
    if (degree(a) <= 0) continue;
    ModPoly b = F.sub(F.powmod(a, exponent, g), ModPoly{Integer(1)});
    ModPoly h = F.gcd(b, g);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

Integer mignotte_style_bound(const UniPoly& f) {
  // 2^n * ||f||_2 * |lc| bounds coefficients of lc * (any factor).
  Rational norm_sq(0);
  for (const auto& c : f.coefficients()) norm_sq += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm_sq.get_num_mpz_t());
  root += 1;
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return pow2 * root * abs(f.leading().get_num());
}

UniPoly symmetric_lift(const PrimeField& F, const ModPoly& a) {
  const Integer half = F.prime() / 2;
  std::vector<Rational> c;
  c.reserve(a.size());
  for (const auto& v : a) c.emplace_back(v > half ? Integer(v - F.prime()) : v);
  return UniPoly(std::move(c));
}

bool divides_exactly(const UniPoly& f, const UniPoly& g, UniPoly& quotient) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) return false;
  for (const auto& c : q.coefficients()) {
    if (c.get_den() != 1) return false;
  }
  quotient = std::move(q);
  return true;
}

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 2.
std::vector<UniPoly> factor_primitive(UniPoly f) {
  const Integer bound = 2 * mignotte_style_bound(f) + 1;
  Integer prime;
  mpz_nextprime(prime.get_mpz_t(), bound.get_mpz_t());
  for (;;) {
    PrimeField F(prime);
    const ModPoly fm = F.from(f);
    if (degree(fm) == f.degree() && degree(F.gcd(fm, F.derivative(fm))) == 0) break;
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
  }
  const PrimeField F(prime);

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  std::vector<ModPoly> modular;
  for (auto& [g, d] : distinct_degree(F, F.monic(F.from(f)))) equal_degree(F, g, d, rng, modular);

  std::vector<UniPoly> found;
  std::size_t subset_size = 1;
  while (2 * subset_size <= modular.size()) {
    bool progressed = false;
    std::vector<bool> pick(modular.size(), false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(subset_size), pick.end(), true);
    do {
      ModPoly product{F.reduce(f.leading().get_num())};
      for (std::size_t i = 0; i < modular.size(); ++i) {
        if (pick[i]) product = F.mul(product, modular[i]);
      }
      const UniPoly candidate = primitive_integer(symmetric_lift(F, product));
      UniPoly quotient;
      if (candidate.degree() > 0 && divides_exactly(f, candidate, quotient)) {
        found.push_back(candidate);
        f = primitive_integer(quotient);
        std::vector<ModPoly> rest;
        for (std::size_t i = 0; i < modular.size(); ++i) {
          if (!pick[i]) rest.push_back(std::move(modular[i]));
        }
        modular = std::move(rest);
        progressed = true;
        break;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (!progressed) ++subset_size;
  }
  if (f.degree() > 0) found.push_back(f);
  return found;
}

bool factor_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

}  // namespace

std::vector<UniPoly> irreducible_factors(const UniPoly& p) {
  if (p.degree() <= 0) return {};
  UniPoly f = primitive_integer(squarefree_part(p));
  std::vector<UniPoly> factors;
  // Pull out the factor x first; it keeps the modular image squarefree-friendly.
  if (sgn(f.coeff(0)) == 0) {
    factors.push_back(UniPoly::x());
    f = primitive_integer(divmod(f, UniPoly::x()).quotient);
  }
  if (f.degree() == 1) {
    factors.push_back(f);
  } else if (f.degree() > 1) {
    for (auto& g : factor_primitive(f)) factors.push_back(std::move(g));
  }
  std::sort(factors.begin(), factors.end(), factor_less);
  return factors;
}

}  // namespace symquartic
