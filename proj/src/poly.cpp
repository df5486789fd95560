#include "bcoh/poly.hpp"

#include <algorithm>
#include <ostream>

#include "bcoh/error.hpp"

namespace bcoh {

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw ValidationError("negative monomial degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

bool Poly::is_monomial() const {
  return std::count_if(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return !c.is_zero(); }) <= 1;
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return kZeroDegree;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::reversed(int degree) const {
  if (degree < this->degree()) throw InvariantViolation("Poly::reversed: degree too small");
  std::vector<Rational> out(static_cast<std::size_t>(degree) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(degree) - i] = coeffs_[i];
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw ValidationError("polynomial division by zero");
  Poly remainder = *this;
  if (remainder.degree() < divisor.degree()) return {Poly(), remainder};
  std::vector<Rational> quotient(static_cast<std::size_t>(degree() - divisor.degree()) + 1);
  const Rational lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    int shift = remainder.degree() - divisor.degree();
    Rational c = remainder.leading() / lead;
    quotient[static_cast<std::size_t>(shift)] = c;
    remainder -= monomial(c, shift) * divisor;
  }
  return {Poly(std::move(quotient)), remainder};
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0 || (c != Rational(1) && c != Rational(-1))) term = c.abs().str();
    if (i >= 1) term += (term.empty() ? "" : "*") + std::string("v");
    if (i >= 2) term += "^" + std::to_string(i);
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + term;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace bcoh
