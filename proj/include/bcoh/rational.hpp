#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bcoh {

// Exact rational number backed by GMP; always in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational pow(unsigned exponent) const;
  // |numerator| * denominator; pivot-size heuristic.
  [[nodiscard]] mpz_class height() const;
  // Throws unless integral and representable as long.
  [[nodiscard]] long to_long() const;

  // "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] const mpq_class& gmp() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bcoh
