#include "bcoh/laurent.hpp"

namespace bcoh {

Laurent2::Laurent2(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

Laurent2 Laurent2::monomial(const Rational& c, int a_power, int v_power) {
  Laurent2 out;
  out.add_term({a_power, v_power}, c);
  return out;
}

void Laurent2::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent2 operator*(const Laurent2& x, const Laurent2& y) {
  Laurent2 out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_)
      out.add_term({ex.first + ey.first, ex.second + ey.second}, cx * cy);
  return out;
}

Rational Laurent2::evaluate(const Rational& a, const Rational& v) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    term *= e.first >= 0 ? a.pow(static_cast<unsigned>(e.first))
                         : a.inverse().pow(static_cast<unsigned>(-e.first));
    term *= e.second >= 0 ? v.pow(static_cast<unsigned>(e.second))
                          : v.inverse().pow(static_cast<unsigned>(-e.second));
    acc += term;
  }
  return acc;
}

std::string Laurent2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    if (e.first != 0) out += "*a^" + std::to_string(e.first);
    if (e.second != 0) out += "*v^" + std::to_string(e.second);
  }
  return out;
}

}  // namespace bcoh
