#include "symquartic/forms.hpp"

#include <stdexcept>

namespace symquartic {
namespace {

WBasis build_basis() {
  const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z();
  WBasis w;
  w.w4 = x.pow(4) + y.pow(4) + z.pow(4);
  w.w3 = x.pow(3) * y + y.pow(3) * z + z.pow(3) * x + x * y.pow(3) + y * z.pow(3) + z * x.pow(3);
  w.w2 = (x * y).pow(2) + (y * z).pow(2) + (z * x).pow(2);
  w.w1 = x * y * z * (x + y + z);
  return w;
}

}  // namespace

std::string_view to_string(Domain domain) { return domain == Domain::Reals ? "real" : "nonneg"; }

Domain parse_domain(std::string_view text) {
  if (text == "real" || text == "reals") return Domain::Reals;
  if (text == "nonneg" || text == "orthant" || text == "nonnegative") return Domain::NonnegativeOrthant;
  throw std::invalid_argument("unknown domain '" + std::string(text) + "' (expected real or nonneg)");
}

const WBasis& w_basis() {
  static const WBasis basis = build_basis();
  return basis;
}

MultiPoly expand(const QuarticForm& form) {
  const WBasis& w = w_basis();
  return w.w4 + w.w3 * form.a + w.w2 * form.b + w.w1 * form.c;
}

Rational eval(const QuarticForm& form, const Rational& x, const Rational& y, const Rational& z) {
  const Rational x2 = x * x, y2 = y * y, z2 = z * z;
  const Rational w4 = x2 * x2 + y2 * y2 + z2 * z2;
  const Rational w3 = x * y * (x2 + y2) + y * z * (y2 + z2) + z * x * (z2 + x2);
  const Rational w2 = x2 * y2 + y2 * z2 + z2 * x2;
  const Rational w1 = x * y * z * (x + y + z);
  return w4 + form.a * w3 + form.b * w2 + form.c * w1;
}

double eval(const QuarticForm& form, double x, double y, double z) {
  const double x2 = x * x, y2 = y * y, z2 = z * z;
  const double w4 = x2 * x2 + y2 * y2 + z2 * z2;
  const double w3 = x * y * (x2 + y2) + y * z * (y2 + z2) + z * x * (z2 + x2);
  const double w2 = x2 * y2 + y2 * z2 + z2 * x2;
  const double w1 = x * y * z * (x + y + z);
  return w4 + form.a.get_d() * w3 + form.b.get_d() * w2 + form.c.get_d() * w1;
}

UniPoly restrict_diag(const QuarticForm& form) {
  const Rational& a = form.a;
  const Rational& b = form.b;
  const Rational& c = form.c;
  return UniPoly({2 + 2 * a + b, 2 * (a + c), 2 * b + c, 2 * a, Rational(1)});
}

UniPoly restrict_edge(const QuarticForm& form) {
  return UniPoly({Rational(1), form.a, form.b, form.a, Rational(1)});
}

}  // namespace symquartic
