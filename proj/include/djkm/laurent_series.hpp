#pragma once

#include <string>
#include <vector>

#include "djkm/rational_poly.hpp"

namespace djkm {

/// Truncated Laurent series in z whose coefficients are polynomials in c.
///
/// Coefficients are known exactly for exponents lowest_order() through
/// truncation_order() inclusive; everything above is O(z^(truncation_order()+1)).
/// Storage is dense over that window. The leading stored coefficient is
/// nonzero unless the series is (known to be) zero, in which case the window
/// is empty and lowest_order() == truncation_order() + 1.
class LaurentSeries {
 public:
  /// The zero series, known through z^truncation_order.
  explicit LaurentSeries(int truncation_order = 0);
  LaurentSeries(int lowest_order, std::vector<RationalPoly> coeffs, int truncation_order);

  static LaurentSeries monomial(const RationalPoly& coeff, int exponent, int truncation_order);
  /// Finite sum sum_k coeffs[k] z^(k + lowest_order), truncated at truncation_order.
  static LaurentSeries from_polynomial(int lowest_order, const std::vector<RationalPoly>& coeffs,
                                       int truncation_order);

  int lowest_order() const { return lowest_; }
  int truncation_order() const { return truncation_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<RationalPoly>& coeffs() const { return coeffs_; }

  /// Coefficient of z^exponent. Zero below the window; throws std::out_of_range
  /// above the truncation order.
  const RationalPoly& coeff(int exponent) const;

  LaurentSeries truncated(int order) const;
  /// Multiplies by z^k.
  LaurentSeries shifted(int k) const;
  /// d/dz, termwise.
  LaurentSeries derivative() const;
  /// Termwise d/dc of every coefficient.
  LaurentSeries derivative_c(int order = 1) const;
  /// Termwise antiderivative in z with zero constant of integration.
  /// Throws RESIDUE_NONZERO when the z^-1 coefficient is known and nonzero.
  LaurentSeries integrate() const;
  /// s^alpha for s with lowest order 0 and constant coefficient 1.
  /// Throws NOT_SQUARE otherwise.
  LaurentSeries pow_unit(const Rational& alpha) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& rhs);
  LaurentSeries& operator-=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const RationalPoly& rhs);

  friend LaurentSeries operator+(LaurentSeries lhs, const LaurentSeries& rhs) { return lhs += rhs; }
  friend LaurentSeries operator-(LaurentSeries lhs, const LaurentSeries& rhs) { return lhs -= rhs; }
  friend LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs);
  friend LaurentSeries operator*(LaurentSeries lhs, const RationalPoly& rhs) { return lhs *= rhs; }
  friend LaurentSeries operator*(const RationalPoly& lhs, LaurentSeries rhs) { return rhs *= lhs; }

  /// Structural equality: same window and coefficients.
  friend bool operator==(const LaurentSeries& lhs, const LaurentSeries& rhs) = default;

  /// Compares coefficients for every exponent both series know, capped at
  /// `through`. Returns the first differing exponent, or nothing.
  friend int first_difference(const LaurentSeries& lhs, const LaurentSeries& rhs, int through);

  std::string to_string() const;

 private:
  void normalize();

  int lowest_ = 1;
  int truncation_ = 0;
  std::vector<RationalPoly> coeffs_;
};

/// Sentinel returned by first_difference when the series agree.
inline constexpr int kNoDifference = -2147483647;

/// Square root with leading coefficient +1. Supports an even lowest order whose
/// leading coefficient is the constant 1; throws NOT_SQUARE otherwise.
LaurentSeries series_sqrt(const LaurentSeries& s);
/// s^(-3/2) for s with constant term 1 at order 0.
LaurentSeries series_pow_neg_3_2(const LaurentSeries& s);
LaurentSeries series_integrate(const LaurentSeries& s);

}  // namespace djkm
