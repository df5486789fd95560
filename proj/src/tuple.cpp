#include "bcoh/tuple.hpp"

#include <algorithm>

#include "bcoh/error.hpp"

namespace bcoh {
namespace {

void check_same_length(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw ValidationError("tuple component-count mismatch");
}

}  // namespace

Tuple Tuple::ones(std::size_t r, int degree) { return {degree, std::vector<Rational>(r, Rational(1))}; }

Tuple Tuple::zero(std::size_t r, int degree) { return {degree, std::vector<Rational>(r, Rational(0))}; }

bool Tuple::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
}

std::string Tuple::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i != 0) out += ",";
    out += coeffs[i].str();
  }
  return out + ")@" + std::to_string(degree);
}

Tuple operator*(const Tuple& a, const Tuple& b) {
  check_same_length(a, b);
  Tuple out(a.degree + b.degree, a.coeffs);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] *= b.coeffs[i];
  return out;
}

Tuple operator+(const Tuple& a, const Tuple& b) {
  check_same_length(a, b);
  if (a.degree != b.degree) throw ValidationError("sum of tuples of different degrees");
  Tuple out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Tuple operator-(const Tuple& a, const Tuple& b) { return a + (Rational(-1) * b); }

Tuple operator*(const Rational& s, const Tuple& t) {
  Tuple out = t;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

}  // namespace bcoh
