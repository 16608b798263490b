#include "djkm/rational.hpp"

#include <ostream>

#include "djkm/error.hpp"

namespace djkm {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw Error(ErrorCode::Parse, "not a decimal integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivZero, "rational with zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= den;
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_parts(std::string_view num, std::string_view den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::DivZero, "rational with zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_parts(text, "1");
  return from_parts(text.substr(0, slash), text.substr(slash + 1));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DivZero, "reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivZero, "division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rising_factorial(const Rational& x, int n) {
  Rational out(1);
  for (int k = 0; k < n; ++k) out *= x + Rational(k);
  return out;
}

}  // namespace djkm
