#pragma once

#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "symquartic/number_field.hpp"
#include "symquartic/rational.hpp"

namespace symquartic {

/// Exponents of x, y, z.
using Exponent = std::array<int, 3>;

/// Sparse polynomial in x, y, z over a coefficient field K (Rational or
/// FieldElem). Zero coefficients are never stored.
template <class K>
class BasicMultiPoly {
 public:
  using Terms = std::map<Exponent, K>;

  BasicMultiPoly() = default;

  static BasicMultiPoly constant(const K& c) { return term(c, {0, 0, 0}); }
  static BasicMultiPoly term(const K& c, const Exponent& e) {
    BasicMultiPoly p;
    p.add_term(e, c);
    return p;
  }
  static BasicMultiPoly var(int index) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    return term(K(Rational(1)), e);
  }
  static BasicMultiPoly x() { return var(0); }
  static BasicMultiPoly y() { return var(1); }
  static BasicMultiPoly z() { return var(2); }

  /// Coefficient-wise conversion, e.g. Rational -> FieldElem.
  template <class Other>
  static BasicMultiPoly from(const BasicMultiPoly<Other>& other) {
    BasicMultiPoly p;
    for (const auto& [e, c] : other.terms()) p.add_term(e, K(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(Rational(0)) : it->second;
  }

  void add_term(const Exponent& e, const K& c) {
    if (is_zero_value(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  BasicMultiPoly& operator+=(const BasicMultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  BasicMultiPoly& operator-=(const BasicMultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, K(-c));
    return *this;
  }
  BasicMultiPoly& operator*=(const K& factor) {
    if (is_zero_value(factor)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = c * factor;
    return *this;
  }
  friend BasicMultiPoly operator+(BasicMultiPoly lhs, const BasicMultiPoly& rhs) { return lhs += rhs; }
  friend BasicMultiPoly operator-(BasicMultiPoly lhs, const BasicMultiPoly& rhs) { return lhs -= rhs; }
  friend BasicMultiPoly operator*(BasicMultiPoly lhs, const K& rhs) { return lhs *= rhs; }
  friend BasicMultiPoly operator*(const K& lhs, BasicMultiPoly rhs) { return rhs *= lhs; }
  friend BasicMultiPoly operator*(const BasicMultiPoly& lhs, const BasicMultiPoly& rhs) {
    BasicMultiPoly out;
    for (const auto& [ea, ca] : lhs.terms_) {
      for (const auto& [eb, cb] : rhs.terms_) {
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, K(ca * cb));
      }
    }
    return out;
  }
  BasicMultiPoly operator-() const {
    BasicMultiPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, K(-c));
    return out;
  }
  friend bool operator==(const BasicMultiPoly& lhs, const BasicMultiPoly& rhs) { return (lhs - rhs).is_zero(); }

  BasicMultiPoly pow(unsigned n) const {
    BasicMultiPoly out = constant(K(Rational(1)));
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
  }

  /// Variables renamed: variable i of the result is variable perm[i] here,
  /// i.e. result(x0, x1, x2) = this(x_{perm^-1}) with exponents permuted.
  BasicMultiPoly permuted(const std::array<int, 3>& perm) const {
    BasicMultiPoly out;
    for (const auto& [e, c] : terms_) {
      Exponent f{};
      for (std::size_t i = 0; i < 3; ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
      out.add_term(f, c);
    }
    return out;
  }

  bool is_symmetric() const {
    static constexpr std::array<std::array<int, 3>, 5> kPerms{
        {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& perm : kPerms) {
      if (!(permuted(perm) == *this)) return false;
    }
    return true;
  }

  bool is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
      if (e[0] + e[1] + e[2] != degree) return false;
    }
    return true;
  }

  template <class V>
  V eval(const V& x, const V& y, const V& z) const {
    V acc = V(0);
    for (const auto& [e, c] : terms_) {
      V m = V(c);
      for (int i = 0; i < e[0]; ++i) m = m * x;
      for (int i = 0; i < e[1]; ++i) m = m * y;
      for (int i = 0; i < e[2]; ++i) m = m * z;
      acc = acc + m;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    static constexpr const char* kNames[3] = {"x", "y", "z"};
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_string(it->second) << ")";
      for (std::size_t i = 0; i < 3; ++i) {
        if (it->first[i] == 0) continue;
        os << "*" << kNames[i];
        if (it->first[i] > 1) os << "^" << it->first[i];
      }
    }
    return os.str();
  }

 private:
  static bool is_zero_value(const K& c) { return symquartic::is_zero(c); }
  static std::string coeff_string(const K& c) {
    if constexpr (std::is_same_v<K, Rational>) {
      return symquartic::to_string(c);
    } else {
      return c.to_string();
    }
  }

  Terms terms_;
};

using MultiPoly = BasicMultiPoly<Rational>;
using FieldMultiPoly = BasicMultiPoly<FieldElem>;

template <class K>
std::ostream& operator<<(std::ostream& os, const BasicMultiPoly<K>& p) {
  return os << p.to_string();
}

}  // namespace symquartic
