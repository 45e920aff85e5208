#include "symquartic/frontier.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace symquartic {
namespace {

const Rational kMinusHalf(-1, 2);

UniPoly two_t_plus_one() { return UniPoly({Rational(1), Rational(2)}); }

void check_pole(const Rational& t) {
  if (t == kMinusHalf) throw PoleError("t = -1/2 is a pole of the parametrization");
}

void check_pole(const FieldElem& t) {
  if ((t - FieldElem(kMinusHalf)).is_zero()) throw PoleError("t = -1/2 is a pole of the parametrization");
}

FieldElem eval_field(const UniPoly& p, const FieldElem& t) {
  FieldElem acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + FieldElem(*it);
  return acc;
}

template <class K>
PQK<K> pqk_impl(const Rational& a, const K& t) {
  const K one(Rational(1));
  const K den = K(Rational(2)) * t + one;
  PQK<K> out;
  out.p = -(t * t + t + one) / den;
  out.q = (t * t + K(Rational(2)) * t) / den;
  const K t_minus_one = t - one;
  if (!is_zero(t_minus_one)) {
    out.k = (K(Rational(2)) * t * t + K(Rational(2 * (a + 1))) * t + K(Rational(a + 2))) / t_minus_one;
  }
  return out;
}

TInterval closed(const AlgebraicNumber& lo, const AlgebraicNumber& hi) { return {lo, true, hi, true}; }

std::vector<AlgebraicNumber> roots_in(const UniPoly& p, const CaseSet& cases, const StepBudget& budget) {
  std::vector<AlgebraicNumber> hits;
  for (auto& root : AlgebraicNumber::real_roots(p, std::nullopt, std::nullopt, budget)) {
    if (cases.contains(root)) hits.push_back(std::move(root));
  }
  return hits;
}

BoundResult closed_form(const Rational& value, const FrontierOptions&, std::string rule,
                        std::vector<AlgebraicNumber> equality_point) {
  BoundResult r;
  r.kind = BoundResult::Kind::ClosedForm;
  r.value = AlgebraicNumber(value);
  r.approx = value;
  r.equality_point = std::move(equality_point);
  r.rule = std::move(rule);
  return r;
}

BoundResult parametric(const AlgebraicNumber& t, const FieldElem& value, const FrontierOptions& options,
                       std::string rule) {
  BoundResult r;
  r.kind = BoundResult::Kind::Parametric;
  r.value = value.to_algebraic();
  r.t = t;
  r.approx = r.value.approx(options.eps, options.budget);
  r.equality_point = {t, AlgebraicNumber(Rational(1)), AlgebraicNumber(Rational(1))};
  r.rule = std::move(rule);
  return r;
}

std::vector<AlgebraicNumber> unit_point() {
  return {AlgebraicNumber(Rational(1)), AlgebraicNumber(Rational(1)), AlgebraicNumber(Rational(1))};
}

}  // namespace

UniPoly c_numerator(const Rational& a) {
  return UniPoly({Rational(-a), Rational(3 * a + 4), Rational(2 * a + 4), Rational(2 * (a + 1)), Rational(2)});
}

UniPoly b_numerator(const Rational& a) {
  return UniPoly({Rational(2 * a + 2), Rational(4 * (a + 1)), Rational(5 * a + 4), Rational(a + 4), Rational(1)});
}

Rational c_of_t(const Rational& a, const Rational& t) {
  check_pole(t);
  return c_numerator(a)(t) / (2 * t + 1);
}

Rational b_of_t(const Rational& a, const Rational& t) {
  check_pole(t);
  return b_numerator(a)(t) / Rational(-(2 * t + 1));
}

FieldElem c_of_t(const Rational& a, const FieldElem& t) {
  check_pole(t);
  return eval_field(c_numerator(a), t) / eval_field(two_t_plus_one(), t);
}

FieldElem b_of_t(const Rational& a, const FieldElem& t) {
  check_pole(t);
  return -(eval_field(b_numerator(a), t) / eval_field(two_t_plus_one(), t));
}

PQK<Rational> pqk(const Rational& a, const Rational& t) {
  check_pole(t);
  return pqk_impl<Rational>(a, t);
}

PQK<FieldElem> pqk(const Rational& a, const FieldElem& t) {
  check_pole(t);
  return pqk_impl<FieldElem>(a, t);
}

std::optional<BranchPoints> branch_points(const Rational& a) {
  if (sgn((a + 2) * (a - 4)) < 0) return std::nullopt;
  const UniPoly quadratic({Rational(a + 4), Rational(2 * a), Rational(2)});
  auto roots = AlgebraicNumber::real_roots(quadratic);
  if (roots.size() == 1) return BranchPoints{roots[0], roots[0]};
  return BranchPoints{roots.at(0), roots.at(1)};
}

bool TInterval::contains(const AlgebraicNumber& t) const {
  const int at_lo = compare(t, lo);
  const int at_hi = compare(t, hi);
  const bool lo_ok = lo_closed ? at_lo >= 0 : at_lo > 0;
  const bool hi_ok = hi_closed ? at_hi <= 0 : at_hi < 0;
  return lo_ok && hi_ok;
}

std::string TInterval::to_string() const {
  std::ostringstream os;
  os << (lo_closed ? "[" : "(") << lo.to_string() << ", " << hi.to_string() << (hi_closed ? "]" : ")");
  return os.str();
}

bool CaseSet::contains(const AlgebraicNumber& t) const {
  return std::any_of(intervals.begin(), intervals.end(), [&](const TInterval& iv) { return iv.contains(t); });
}

CaseSet case_intervals(const Rational& a, Section section) {
  const AlgebraicNumber pole(kMinusHalf);
  const AlgebraicNumber neg_a_minus_1(Rational(-a - 1));
  if (section == Section::RealCase) {
    if (a == kMinusHalf) throw RangeError("a = -1/2 is not covered by the parametrization");
    if (a > kMinusHalf && a <= 4) return {"3.1", {{neg_a_minus_1, true, pole, false}}};
    if (a >= -2 && a < kMinusHalf) return {"3.2", {{pole, false, neg_a_minus_1, true}}};
    const BranchPoints bp = *branch_points(a);
    if (a > 4) return {"3.3", {closed(neg_a_minus_1, bp.t1), {bp.t2, true, pole, false}}};
    return {"3.4", {{pole, false, bp.t1, true}, closed(neg_a_minus_1, bp.t2)}};
  }
  if (a >= -1) throw RangeError("nonnegative-variable cases need a < -1");
  const AlgebraicNumber zero(Rational(0));
  if (a >= -2) return {"7.1", {closed(zero, neg_a_minus_1)}};
  const BranchPoints bp = *branch_points(a);
  if (a > -4) return {"7.2", {closed(zero, bp.t1), closed(neg_a_minus_1, bp.t2)}};
  return {"7.3", {closed(neg_a_minus_1, bp.t2)}};
}

ParamPoint param_point(const Rational& a, const AlgebraicNumber& t) {
  const FieldElem tf = FieldElem::embed(t);
  PQK<FieldElem> s = pqk(a, tf);
  return {t, b_of_t(a, tf), c_of_t(a, tf), std::move(s.p), std::move(s.q), std::move(s.k)};
}

AlgebraicNumber invert_c(const Rational& a, const Rational& c, const StepBudget& budget) {
  if (a == kMinusHalf) throw RangeError("invert_c: a = -1/2 is excluded");
  if (c < -a * a - 2 * a) throw RangeError("invert_c: c must be at least -a^2 - 2a");
  const UniPoly equation = c_numerator(a) - two_t_plus_one() * c;
  const auto hits = roots_in(equation, case_intervals(a, Section::RealCase), budget);
  if (hits.empty()) throw std::logic_error("invert_c: no parameter in the case intervals");
  return hits.front();
}

Rational nonneg_b_lower(const Rational& a) {
  if (a <= -4) return a * a / 4 + 2;
  return Rational(-2 * (a + 1));
}

AlgebraicNumber invert_b(const Rational& a, const Rational& b, const StepBudget& budget) {
  if (a >= -1) throw RangeError("invert_b: requires a < -1");
  if (b < nonneg_b_lower(a) || b > a * a - 1) throw RangeError("invert_b: b outside the parametrized range");
  const UniPoly equation = b_numerator(a) + two_t_plus_one() * b;
  const auto hits = roots_in(equation, case_intervals(a, Section::NonnegCase), budget);
  if (hits.empty()) throw std::logic_error("invert_b: no parameter in the case intervals");
  return hits.front();
}

BoundResult bmin_real(const Rational& a, const Rational& c, const FrontierOptions& options) {
  if (c <= -a * a - 2 * a) return closed_form(Rational(-2 * a - c - 1), options, "closed-form", unit_point());
  if (a == kMinusHalf) {
    // Here c > 3/4, so c/2 - 9/8 > -c and the optimum vanishes at (2, 2, -1).
    const Rational value = c / 2 - Rational(9, 8);
    return closed_form(value, options, "a=-1/2",
                       {AlgebraicNumber(Rational(2)), AlgebraicNumber(Rational(2)), AlgebraicNumber(Rational(-1))});
  }
  const AlgebraicNumber t = invert_c(a, c, options.budget);
  const CaseSet cases = case_intervals(a, Section::RealCase);
  return parametric(t, b_of_t(a, FieldElem::embed(t)), options, cases.label);
}

std::variant<BoundResult, Infeasible> cmin_nonneg(const Rational& a, const Rational& b,
                                                  const FrontierOptions& options) {
  const Rational lower = nonneg_b_lower(a);
  if (b < lower) {
    return Infeasible{"b = " + to_string(b) + " is below the necessary bound " + to_string(lower)};
  }
  if (a >= -1 || b >= a * a - 1) return closed_form(Rational(-2 * a - b - 1), options, "closed-form", unit_point());
  const AlgebraicNumber t = invert_b(a, b, options.budget);
  const CaseSet cases = case_intervals(a, Section::NonnegCase);
  return parametric(t, c_of_t(a, FieldElem::embed(t)), options, cases.label);
}

}  // namespace symquartic
