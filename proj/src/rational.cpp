#include "bcoh/rational.hpp"

#include <ostream>

#include "bcoh/error.hpp"

namespace bcoh {

Rational::Rational(long num, long den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto well_formed = [](const std::string& part, bool allow_sign) {
    std::size_t start = (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() <= start) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (!well_formed(num, true) || !well_formed(den, false))
    throw ValidationError("malformed rational \"" + s + "\"");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ValidationError("rational with zero denominator: \"" + s + "\"");
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ValidationError("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  Rational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

mpz_class Rational::height() const {
  mpz_class n = ::abs(value_.get_num());
  return n * value_.get_den();
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p())
    throw ValidationError("expected a machine integer, got " + str());
  return value_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bcoh
