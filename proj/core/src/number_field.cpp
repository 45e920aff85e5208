#include "symquartic/number_field.hpp"

#include <stdexcept>
#include <utility>

#include "symquartic/resultant.hpp"

namespace symquartic {
namespace {

struct Enclosure {
  Rational lo, hi;
};

Enclosure mul(const Enclosure& a, const Enclosure& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Enclosure out{c[0], c[0]};
  for (const auto& v : c) {
    if (v < out.lo) out.lo = v;
    if (v > out.hi) out.hi = v;
  }
  return out;
}

// Horner evaluation of p over [lo, hi] in exact interval arithmetic.
Enclosure enclose(const UniPoly& p, const Rational& lo, const Rational& hi) {
  Enclosure acc{Rational(0), Rational(0)};
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, {lo, hi});
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

bool same_generator(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a.defining() == b.defining() && compare(a, b) == 0;
}

}  // namespace

FieldElem::FieldElem(const Rational& value) : rep_(UniPoly::constant(value)) {}

FieldElem::FieldElem(const Generator& generator, const UniPoly& representation) : rep_(representation) {
  if (!generator) {
    if (representation.degree() > 0) throw std::invalid_argument("non-constant element without a generator");
  } else if (generator->is_rational()) {
    rep_ = UniPoly::constant(representation(generator->rational()));
  } else {
    gen_ = generator;
    reduce();
  }
}

FieldElem FieldElem::embed(const AlgebraicNumber& alpha) {
  if (alpha.is_rational()) return FieldElem(alpha.rational());
  return FieldElem(std::make_shared<const AlgebraicNumber>(alpha), UniPoly::x());
}

void FieldElem::reduce() {
  if (gen_ && rep_.degree() >= gen_->defining().degree()) rep_ = divmod(rep_, gen_->defining()).remainder;
}

void FieldElem::adopt(const Generator& other) {
  if (!other || other == gen_) return;
  if (!gen_) {
    gen_ = other;
    return;
  }
  if (!same_generator(*gen_, *other)) throw std::invalid_argument("field elements over different generators");
}

Rational FieldElem::rational() const {
  if (!is_rational()) throw std::logic_error("field element is irrational");
  return rep_.coeff(0);
}

int FieldElem::sign() const {
  if (is_rational()) return sgn(rep_.coeff(0));
  return gen_->sign_of(rep_);
}

Rational FieldElem::approx(const Rational& eps) const {
  if (is_rational()) return rep_.coeff(0);
  if (sgn(eps) <= 0) throw std::invalid_argument("approx: eps must be positive");
  AlgebraicNumber alpha = *gen_;
  Rational width = alpha.hi() - alpha.lo();
  for (;;) {
    Enclosure e = enclose(rep_, alpha.lo(), alpha.hi());
    if (e.hi - e.lo <= 2 * eps) return (e.lo + e.hi) / 2;
    width /= 16;
    alpha = alpha.narrowed(width);
  }
}

double FieldElem::to_double() const { return approx(Rational(1, 1UL << 60)).get_d(); }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return FieldElem(Rational(1) / rep_.coeff(0));
  const ExtendedGcd eg = extended_gcd(rep_, gen_->defining());
  if (eg.gcd.degree() != 0) throw std::domain_error("element not invertible modulo the minimal polynomial");
  return FieldElem(gen_, eg.s);
}

FieldElem& FieldElem::operator+=(const FieldElem& other) {
  adopt(other.gen_);
  rep_ += other.rep_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& other) {
  adopt(other.gen_);
  rep_ -= other.rep_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& other) {
  adopt(other.gen_);
  rep_ *= other.rep_;
  reduce();
  return *this;
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  out.rep_ = -out.rep_;
  return out;
}

AlgebraicNumber FieldElem::to_algebraic() const {
  if (is_rational()) return AlgebraicNumber(rep_.coeff(0));
  // s - E(t) as a polynomial in t with coefficients in Q[s].
  BiPoly shifted;
  for (const auto& c : rep_.coefficients()) shifted.push_back(UniPoly::constant(Rational(-c)));
  if (shifted.empty()) shifted.emplace_back();
  shifted[0] += UniPoly::x();
  const UniPoly eliminated = resultant(lift_t(gen_->defining()), shifted);
  for (const auto& iv : isolate_roots(eliminated)) {
    bool inside = false;
    if (iv.exact()) {
      inside = (*this - FieldElem(iv.lo)).sign() == 0;
    } else {
      inside = (*this - FieldElem(iv.lo)).sign() > 0 && (*this - FieldElem(iv.hi)).sign() < 0;
    }
    if (inside) return AlgebraicNumber::from_root(eliminated, iv);
  }
  throw std::logic_error("to_algebraic: value not found among resultant roots");
}

std::string FieldElem::to_string() const {
  if (is_rational()) return symquartic::to_string(rep_.coeff(0));
  return rep_.to_string("t");
}

}  // namespace symquartic
