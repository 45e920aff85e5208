#include "symquartic/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace symquartic {
namespace {

Integer pow10(unsigned exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_signed_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  Integer value(std::string(body), 10);
  return (!s.empty() && s.front() == '-') ? Integer(-value) : value;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const Integer exp_value = parse_signed_integer(s.substr(e + 1));
    if (abs(exp_value) > 10000) throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational value = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                                 : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_signed_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("malformed denominator: '" + std::string(text) + "'");
    const Integer den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  const Integer scale = pow10(static_cast<unsigned>(digits));
  Integer scaled = abs(value.get_num()) * scale / value.get_den();
  std::string body = scaled.get_str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return (sgn(value) < 0 ? "-" : "") + body;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational abs(const Rational& value) { return sgn(value) < 0 ? Rational(-value) : value; }

Integer floor(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    factor *= factor;
    exponent >>= 1U;
  }
  return result;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return Rational(0);
  if (sgn(hi) <= 0) return Rational(-simplest_between(Rational(-hi), Rational(-lo)));
  // 0 <= lo < hi: continued-fraction descent.
  const Integer fl = floor(lo);
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  if (Rational(fl) == lo) {
    // lo is an integer and hi <= lo + 1; answer is fl + 1/m for the smallest m with fl + 1/m < hi.
    const Rational rest = hi - Rational(fl);
    Integer m = floor(Rational(1) / rest) + 1;
    Rational result(fl * m + 1, m);
    result.canonicalize();
    return result;
  }
  const Rational inner = simplest_between(Rational(1) / (hi - Rational(fl)), Rational(1) / (lo - Rational(fl)));
  Rational result = Rational(fl) + Rational(1) / inner;
  result.canonicalize();
  return result;
}

Rational rationalize(double x, const Integer& max_denominator) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite value");
  const Rational target(x);
  Integer h_prev = 1, h = floor(target);
  Integer k_prev = 0, k = 1;
  Rational rest = target - Rational(h);
  while (sgn(rest) != 0) {
    const Rational inv = Rational(1) / rest;
    const Integer term = floor(inv);
    const Integer h_next = term * h + h_prev;
    const Integer k_next = term * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    rest = inv - Rational(term);
  }
  Rational result(h, k);
  result.canonicalize();
  return result;
}

Rational decimal_epsilon(int digits) { return Rational(Integer(1), pow10(static_cast<unsigned>(digits))); }

}  // namespace symquartic
