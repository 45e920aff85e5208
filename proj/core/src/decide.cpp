#include "symquartic/decide.hpp"

#include <stdexcept>

#include "symquartic/nonneg.hpp"

namespace symquartic {
namespace {

std::optional<Counterexample> check(const QuarticForm& form, const UniPoly& restriction, HalfLine line,
                                    const char* name, const Rational& third) {
  const NonnegVerdict v = univariate_nonneg(restriction, line);
  if (v.nonneg) return std::nullopt;
  Counterexample cx{{*v.witness, Rational(1), third}, Rational(0), name, v.witness_lo, v.witness_hi};
  cx.value = eval(form, cx.point[0], cx.point[1], cx.point[2]);
  if (sgn(cx.value) >= 0) throw std::logic_error("decide: witness is not negative");
  return cx;
}

}  // namespace

Decision decide(const QuarticForm& form, const DecideOptions& options) {
  Decision d;
  if (form.domain == Domain::Reals) {
    d.counterexample = check(form, restrict_diag(form), HalfLine::AllReals, "diag", Rational(1));
  } else {
    d.counterexample = check(form, restrict_diag(form), HalfLine::Nonnegative, "diag", Rational(1));
    if (!d.counterexample) {
      d.counterexample = check(form, restrict_edge(form), HalfLine::Nonnegative, "edge", Rational(0));
    }
  }
  d.holds = !d.counterexample;
  if (!d.holds || !options.want_certificate) return d;

  d.certificate = certificate_for(form);
  if (!d.certificate) {
    d.certificate_unavailable = true;
    return d;
  }
  const Verification v = verify(*d.certificate, form);
  if (!v.valid()) throw std::logic_error("decide: constructed certificate failed verification: " + v.reason);
  return d;
}

}  // namespace symquartic
