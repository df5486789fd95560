#pragma once

#include <map>
#include <string>
#include <utility>

#include "bcoh/rational.hpp"

namespace bcoh {

// Sparse Laurent polynomial in two variables (a, v) over Q. Enough to check
// 2x2 identities involving a^{-1} and v^{-1} symbolically.
class Laurent2 {
 public:
  using Exponent = std::pair<int, int>;  // (power of a, power of v)

  Laurent2() = default;
  Laurent2(const Rational& c);  // NOLINT(google-explicit-constructor)
  Laurent2(int c) : Laurent2(Rational(c)) {}  // NOLINT
  static Laurent2 monomial(const Rational& c, int a_power, int v_power);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponent, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational evaluate(const Rational& a, const Rational& v) const;

  Laurent2& operator+=(const Laurent2& o);
  Laurent2& operator-=(const Laurent2& o);
  friend Laurent2 operator+(Laurent2 x, const Laurent2& y) { return x += y; }
  friend Laurent2 operator-(Laurent2 x, const Laurent2& y) { return x -= y; }
  friend Laurent2 operator*(const Laurent2& x, const Laurent2& y);
  Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }
  friend bool operator==(const Laurent2&, const Laurent2&) = default;

  [[nodiscard]] std::string str() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

}  // namespace bcoh
