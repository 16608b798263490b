#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "djkm/rational.hpp"

namespace djkm {

/// Dense univariate polynomial in one variable (called c throughout) with
/// exact rational coefficients, stored degree-ascending.
///
/// Trailing zeros are always stripped, so the zero polynomial has an empty
/// coefficient list and degree() == -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& value);
  static RationalPoly monomial(const Rational& coeff, int degree);
  /// The polynomial c.
  static RationalPoly variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of c^i; zero outside the stored range.
  Rational coeff(int i) const;
  Rational leading() const;

  /// k-th derivative with respect to c.
  RationalPoly derivative(int order = 1) const;
  Rational evaluate(const Rational& at) const;
  double evaluate(double at) const;

  /// True when only even (odd) powers of c occur. The zero polynomial is both.
  bool is_even() const;
  bool is_odd() const;

  /// Exact quotient; throws DIV_ZERO for a zero divisor and NON_DIVISIBLE
  /// when the remainder is nonzero.
  RationalPoly exact_divide(const RationalPoly& divisor) const;
  RationalPoly exact_divide(const Rational& divisor) const;
  /// Euclidean division: {quotient, remainder}.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& rhs);

  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs);
  friend RationalPoly operator*(RationalPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend RationalPoly operator*(const Rational& lhs, RationalPoly rhs) { return rhs *= lhs; }

  friend bool operator==(const RationalPoly& lhs, const RationalPoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  /// Human-readable form such as "32/35*c^2 - 1/7".
  std::string to_string(char var = 'c') const;

 private:
  void strip();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace djkm
