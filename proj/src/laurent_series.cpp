#include "djkm/laurent_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "djkm/error.hpp"

namespace djkm {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

const RationalPoly& zero_poly() {
  static const RationalPoly zero;
  return zero;
}

}  // namespace

LaurentSeries::LaurentSeries(int truncation_order) : lowest_(truncation_order + 1), truncation_(truncation_order) {}

LaurentSeries::LaurentSeries(int lowest_order, std::vector<RationalPoly> coeffs, int truncation_order)
    : lowest_(lowest_order), truncation_(truncation_order), coeffs_(std::move(coeffs)) {
  // Anything past the truncation order is unknown; missing entries inside the
  // window are known zeros.
  const int width = truncation_ - lowest_ + 1;
  coeffs_.resize(idx(std::max(width, 0)));
  normalize();
}

LaurentSeries LaurentSeries::monomial(const RationalPoly& coeff, int exponent, int truncation_order) {
  if (exponent > truncation_order) return LaurentSeries(truncation_order);
  return LaurentSeries(exponent, {coeff}, truncation_order);
}

LaurentSeries LaurentSeries::from_polynomial(int lowest_order, const std::vector<RationalPoly>& coeffs,
                                             int truncation_order) {
  return LaurentSeries(lowest_order, coeffs, truncation_order);
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    lowest_ = truncation_ + 1;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    lowest_ += static_cast<int>(lead);
  }
}

const RationalPoly& LaurentSeries::coeff(int exponent) const {
  if (exponent > truncation_) {
    throw std::out_of_range("coefficient of z^" + std::to_string(exponent) +
                            " is beyond truncation order " + std::to_string(truncation_));
  }
  if (exponent < lowest_) return zero_poly();
  return coeffs_[idx(exponent - lowest_)];
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order >= truncation_) return *this;
  if (order < lowest_) return LaurentSeries(order);
  std::vector<RationalPoly> c(coeffs_.begin(), coeffs_.begin() + (order - lowest_ + 1));
  return LaurentSeries(lowest_, std::move(c), order);
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries out = *this;
  out.lowest_ += k;
  out.truncation_ += k;
  return out;
}

LaurentSeries LaurentSeries::derivative() const {
  if (is_zero()) return LaurentSeries(truncation_ - 1);
  std::vector<RationalPoly> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = lowest_ + static_cast<int>(i);
    out.push_back(coeffs_[i] * Rational(e));
  }
  return LaurentSeries(lowest_ - 1, std::move(out), truncation_ - 1);
}

LaurentSeries LaurentSeries::derivative_c(int order) const {
  std::vector<RationalPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.derivative(order));
  return LaurentSeries(lowest_, std::move(out), truncation_);
}

LaurentSeries LaurentSeries::integrate() const {
  if (is_zero()) return LaurentSeries(truncation_ + 1);
  if (lowest_ <= -1 && truncation_ >= -1 && !coeff(-1).is_zero()) {
    throw Error(ErrorCode::ResidueNonzero,
                "z^-1 coefficient " + coeff(-1).to_string() + " would integrate to a logarithm");
  }
  std::vector<RationalPoly> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = lowest_ + static_cast<int>(i);
    if (e == -1) {
      out.emplace_back();  // constant of integration
    } else {
      out.push_back(coeffs_[i] * Rational(1, e + 1));
    }
  }
  return LaurentSeries(lowest_ + 1, std::move(out), truncation_ + 1);
}

LaurentSeries LaurentSeries::pow_unit(const Rational& alpha) const {
  if (lowest_ != 0 || coeffs_.empty() || coeffs_[0] != RationalPoly::constant(Rational(1))) {
    throw Error(ErrorCode::NotSquare, "power series root needs constant term 1 at order 0, got " + to_string());
  }
  // With r = s^alpha, s*r' = alpha*s'*r gives, for s_0 = 1,
  //   n r_n = sum_{k=1..n} ((alpha + 1) k - n) s_k r_{n-k}.
  const int n_max = truncation_;
  std::vector<RationalPoly> r(idx(n_max + 1));
  r[0] = RationalPoly::constant(Rational(1));
  std::vector<int> support;
  for (int k = 1; k < static_cast<int>(coeffs_.size()) && k <= n_max; ++k) {
    if (!coeffs_[idx(k)].is_zero()) support.push_back(k);
  }
  const Rational alpha1 = alpha + Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    RationalPoly acc;
    for (int k : support) {
      if (k > n) break;
      const Rational w = alpha1 * Rational(k) - Rational(n);
      if (w.is_zero() || r[idx(n - k)].is_zero()) continue;
      acc += (coeffs_[idx(k)] * r[idx(n - k)]) * w;
    }
    r[idx(n)] = acc * Rational(1, n);
  }
  return LaurentSeries(0, std::move(r), n_max);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  const int trunc = std::min(truncation_, rhs.truncation_);
  const int low = std::min(lowest_, rhs.lowest_);
  if (low > trunc) return *this = LaurentSeries(trunc);
  std::vector<RationalPoly> out(idx(trunc - low + 1));
  for (int e = low; e <= trunc; ++e) {
    if (e >= lowest_) out[idx(e - low)] += coeffs_[idx(e - lowest_)];
    if (e >= rhs.lowest_) out[idx(e - low)] += rhs.coeffs_[idx(e - rhs.lowest_)];
  }
  return *this = LaurentSeries(low, std::move(out), trunc);
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs) { return *this += -rhs; }

LaurentSeries& LaurentSeries::operator*=(const RationalPoly& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs) {
  // Each factor's unknown tail starts above its truncation order, so the
  // product is known up to whichever tail arrives first.
  const int trunc = std::min(lhs.truncation_ + rhs.lowest_, rhs.truncation_ + lhs.lowest_);
  if (lhs.is_zero() || rhs.is_zero()) return LaurentSeries(trunc);
  const int low = lhs.lowest_ + rhs.lowest_;
  if (low > trunc) return LaurentSeries(trunc);
  std::vector<RationalPoly> out(idx(trunc - low + 1));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size() && i + j < out.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return LaurentSeries(low, std::move(out), trunc);
}

int first_difference(const LaurentSeries& lhs, const LaurentSeries& rhs, int through) {
  const int top = std::min({through, lhs.truncation_, rhs.truncation_});
  const int low = std::min(lhs.lowest_, rhs.lowest_);
  for (int e = low; e <= top; ++e) {
    if (lhs.coeff(e) != rhs.coeff(e)) return e;
  }
  return kNoDifference;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].to_string() << ")*z^" << lowest_ + static_cast<int>(i);
  }
  if (!first) os << " + ";
  os << "O(z^" << truncation_ + 1 << ")";
  return os.str();
}

LaurentSeries series_sqrt(const LaurentSeries& s) {
  if (s.is_zero() || s.lowest_order() % 2 != 0) {
    throw Error(ErrorCode::NotSquare, "series has no even leading term: " + s.to_string());
  }
  const int half = s.lowest_order() / 2;
  return s.shifted(-s.lowest_order()).pow_unit(Rational(1, 2)).shifted(half);
}

LaurentSeries series_pow_neg_3_2(const LaurentSeries& s) { return s.pow_unit(Rational(-3, 2)); }

LaurentSeries series_integrate(const LaurentSeries& s) { return s.integrate(); }

}  // namespace djkm
