#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bcoh/rational.hpp"

namespace bcoh {

// Univariate polynomial over Q in the curve parameter v. Coefficient i is
// the coefficient of v^i; no trailing zeros are stored.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int degree);
  static Poly variable() { return monomial(Rational(1), 1); }

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Coefficient of v^i; zero outside the stored range.
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  // At most one nonzero coefficient (the zero polynomial counts).
  [[nodiscard]] bool is_monomial() const;
  // Lowest power with nonzero coefficient; kZeroDegree for zero.
  [[nodiscard]] int valuation() const;
  [[nodiscard]] Rational eval(const Rational& x) const;
  // v^degree * p(1/v); requires degree >= this->degree().
  [[nodiscard]] Poly reversed(int degree) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Euclidean division; throws on a zero divisor.
  [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  [[nodiscard]] Poly pow(unsigned exponent) const;

  [[nodiscard]] std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace bcoh
