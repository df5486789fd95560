#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bcoh/rational.hpp"

namespace bcoh {

// Homogeneous element (c_i * v^degree)_i of the tuple ring (+)_i Q[v].
// `degree` is the half-degree: cohomological degree is 2 * degree.
struct Tuple {
  int degree = 0;
  std::vector<Rational> coeffs;

  Tuple() = default;
  Tuple(int degree_, std::vector<Rational> coeffs_) : degree(degree_), coeffs(std::move(coeffs_)) {}

  static Tuple ones(std::size_t r, int degree = 0);
  static Tuple zero(std::size_t r, int degree = 0);

  [[nodiscard]] std::size_t size() const { return coeffs.size(); }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Tuple& a, const Tuple& b) = default;
};

// Ring product: componentwise product of coefficients, degrees add.
Tuple operator*(const Tuple& a, const Tuple& b);
// Sum of two tuples of the same degree.
Tuple operator+(const Tuple& a, const Tuple& b);
Tuple operator-(const Tuple& a, const Tuple& b);
Tuple operator*(const Rational& s, const Tuple& t);

}  // namespace bcoh
