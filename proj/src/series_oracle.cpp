#include "djkm/series_oracle.hpp"

#include <stdexcept>
#include <string>

#include "djkm/error.hpp"

namespace djkm {

namespace {

RationalPoly constant(long v) { return RationalPoly::constant(Rational(v)); }

void require_order(int n, int min, const char* what) {
  if (n < min) throw std::invalid_argument(std::string(what) + " needs order >= " + std::to_string(min));
}

}  // namespace

OracleResult compare_with_family(FamilyId id, int n, const LaurentSeries& series) {
  OracleResult out;
  out.family = id;
  out.truncation = n;
  out.series = series.truncated(n);
  const FamilyTable table = generate(id, IndexView::Shifted, n);
  for (int k = 0; k <= n; ++k) {
    if (out.series.coeff(k) != table.at(k)) {
      out.first_mismatch = k;
      break;
    }
  }
  if (out.series.lowest_order() < 0) out.first_mismatch = out.series.lowest_order();
  out.matched = !out.first_mismatch.has_value();
  return out;
}

namespace {

// Adds kappa z sqrt(s) so that the z^1 coefficient of the result vanishes.
LaurentSeries fix_constant(const LaurentSeries& series, const LaurentSeries& z_root) {
  const RationalPoly kappa = -series.coeff(1);
  if (kappa.is_zero()) return series;
  return series + z_root * kappa;
}

}  // namespace

LaurentSeries quartic_series(int trunc) {
  return LaurentSeries(0, {constant(1), {}, RationalPoly::variable() * Rational(-2), {}, constant(1)}, trunc);
}

OracleResult expand_elliptic1(int n) {
  require_order(n, 4, "expand_elliptic1");
  const LaurentSeries s = quartic_series(n + 1);
  const LaurentSeries inv32 = series_pow_neg_3_2(s);
  const LaurentSeries front(-2, {constant(-1), {}, RationalPoly::variable() * Rational(4)}, n + 4);
  const LaurentSeries integrand = front * inv32;
  const LaurentSeries z_root = series_sqrt(s).shifted(1);
  const LaurentSeries raw = z_root * series_integrate(integrand);
  return compare_with_family(FamilyId::P4, n, fix_constant(raw, z_root));
}

OracleResult expand_elliptic2(int n) {
  require_order(n, 2, "expand_elliptic2");
  const LaurentSeries s = quartic_series(n + 1);
  const LaurentSeries z_root = series_sqrt(s).shifted(1);
  const LaurentSeries product = z_root * series_integrate(series_pow_neg_3_2(s));
  for (int k = product.lowest_order(); k <= product.truncation_order(); ++k) {
    if (k % 2 != 0 && !product.coeff(k).is_zero()) {
      throw std::logic_error("elliptic2 expansion has an odd term at z^" + std::to_string(k));
    }
  }
  return compare_with_family(FamilyId::P2, n, product);
}

OracleResult expand_gegenbauer_sum(int n) {
  require_order(n, 4, "expand_gegenbauer_sum");
  // The bracket is needed through z^{n-1}.
  const int trunc = n - 1;
  const auto q = gegenbauer_sequence(Rational(3, 2), trunc / 2 + 1);
  std::vector<RationalPoly> coeffs(static_cast<std::size_t>(trunc + 2));
  auto slot = [&](int e) -> RationalPoly& { return coeffs[static_cast<std::size_t>(e + 1)]; };
  const RationalPoly four_c = RationalPoly::variable() * Rational(4);
  for (int k = 0; 2 * k - 1 <= trunc; ++k) {
    const RationalPoly& qk = q[static_cast<std::size_t>(k)];
    slot(2 * k - 1) -= qk * Rational(1, 2 * k - 1);
    if (2 * k + 1 <= trunc) slot(2 * k + 1) += four_c * qk * Rational(1, 2 * k + 1);
  }
  const LaurentSeries bracket(-1, std::move(coeffs), trunc);
  const LaurentSeries z_root = series_sqrt(quartic_series(n + 1)).shifted(1);
  return compare_with_family(FamilyId::P4, n, fix_constant(z_root * bracket, z_root));
}

bool check_funde(int n, FamilyId family) {
  require_order(n, 0, "check_funde");
  const FamilyTable table = generate(family, IndexView::Shifted, n);
  const LaurentSeries p(0, table.entries, n);
  const RationalPoly c = RationalPoly::variable();
  const int wide = n + 8;
  const LaurentSeries a(1, {constant(1), {}, c * Rational(-2), {}, constant(1)}, wide);
  const LaurentSeries b(0, {constant(1), {}, c * Rational(-4), {}, constant(3)}, wide);
  const LaurentSeries lhs = a * p.derivative() - b * p;

  auto init = [&](int k) { return PolynomialFamily::initial_value(family, k); };
  const LaurentSeries rhs(0,
                          {constant(1) * -init(-4), {}, c * (init(-4) * Rational(4)) + constant(1) * init(-2),
                           (constant(1) * init(-1) + c * init(-3)) * Rational(2)},
                          wide);
  return first_difference(lhs, rhs, n) == kNoDifference && lhs.truncation_order() >= n;
}

}  // namespace djkm
