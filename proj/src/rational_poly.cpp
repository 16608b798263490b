#include "djkm/rational_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "djkm/error.hpp"

namespace djkm {

namespace {

// Clears denominators: returns integer coefficients and their common denominator.
std::pair<std::vector<mpz_class>, mpz_class> integer_form(const std::vector<Rational>& coeffs) {
  mpz_class common = 1;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  std::vector<mpz_class> ints(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    mpz_divexact(ints[i].get_mpz_t(), common.get_mpz_t(), coeffs[i].raw().get_den_mpz_t());
    ints[i] *= coeffs[i].raw().get_num();
  }
  return {std::move(ints), std::move(common)};
}

}  // namespace

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { strip(); }

RationalPoly RationalPoly::constant(const Rational& value) { return RationalPoly({value}); }

RationalPoly RationalPoly::monomial(const Rational& coeff, int degree) {
  if (coeff.is_zero() || degree < 0) return {};
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return RationalPoly(std::move(c));
}

void RationalPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::leading() const { return is_zero() ? Rational() : coeffs_.back(); }

RationalPoly RationalPoly::derivative(int order) const {
  if (order <= 0) return *this;
  if (order > degree()) return {};
  std::vector<Rational> out(coeffs_.size() - static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_class falling = 1;
    for (int k = 0; k < order; ++k) falling *= static_cast<long>(i) + order - k;
    out[i] = coeffs_[i + static_cast<std::size_t>(order)] * Rational(mpq_class(falling));
  }
  return RationalPoly(std::move(out));
}

Rational RationalPoly::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

double RationalPoly::evaluate(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->to_double();
  return acc;
}

bool RationalPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

bool RationalPoly::is_odd() const {
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivZero, "polynomial division by zero");
  if (degree() < divisor.degree()) return {RationalPoly(), *this};
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const Rational lead_inv = divisor.leading().reciprocal();
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      const auto& dj = divisor.coeffs_[static_cast<std::size_t>(j)];
      if (!dj.is_zero()) rem[static_cast<std::size_t>(k + j)] -= q * dj;
    }
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::exact_divide(const RationalPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) {
    throw Error(ErrorCode::NonDivisible,
                "(" + to_string() + ") / (" + divisor.to_string() + ") leaves remainder " + r.to_string());
  }
  return q;
}

RationalPoly RationalPoly::exact_divide(const Rational& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivZero, "polynomial division by zero scalar");
  return *this * divisor.reciprocal();
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] += rhs.coeffs_[i];
  }
  strip();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] -= rhs.coeffs_[i];
  }
  strip();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) {
    if (!c.is_zero()) c *= rhs;
  }
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) { return *this = *this * rhs; }

RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (rhs.degree() == 0) return lhs * rhs.coeffs_[0];
  if (lhs.degree() == 0) return rhs * lhs.coeffs_[0];

  // Convolve over the integers and divide once at the end: one gcd per
  // output coefficient instead of one per partial product.
  auto [a, da] = integer_form(lhs.coeffs_);
  auto [b, db] = integer_form(rhs.coeffs_);
  std::vector<mpz_class> prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  const mpz_class den = da * db;
  std::vector<Rational> out;
  out.reserve(prod.size());
  for (auto& p : prod) out.emplace_back(mpq_class(p, den));
  return RationalPoly(std::move(out));
}

std::string RationalPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.to_string(); }

}  // namespace djkm
