#include "djkm/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "djkm/error.hpp"

namespace djkm {

std::string_view family_name(FamilyId id) {
  switch (id) {
    case FamilyId::P4: return "P-4";
    case FamilyId::P3: return "P-3";
    case FamilyId::P2: return "P-2";
    case FamilyId::P1: return "P-1";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  if (name == "P-4" || name == "P4") return FamilyId::P4;
  if (name == "P-3" || name == "P3") return FamilyId::P3;
  if (name == "P-2" || name == "P2") return FamilyId::P2;
  if (name == "P-1" || name == "P1") return FamilyId::P1;
  return std::nullopt;
}

std::string_view view_name(IndexView view) {
  switch (view) {
    case IndexView::Original: return "original";
    case IndexView::Shifted: return "shifted";
    case IndexView::Q: return "q";
    case IndexView::QBar: return "qbar";
  }
  return "?";
}

std::optional<IndexView> parse_view(std::string_view name) {
  if (name == "original") return IndexView::Original;
  if (name == "shifted") return IndexView::Shifted;
  if (name == "q") return IndexView::Q;
  if (name == "qbar") return IndexView::QBar;
  return std::nullopt;
}

int to_original(IndexView view, int n) {
  switch (view) {
    case IndexView::Original: return n;
    case IndexView::Shifted: return n - 4;
    case IndexView::Q: return 2 * n;
    case IndexView::QBar: return 2 * n + 2;
  }
  return n;
}

int first_index(IndexView view) {
  switch (view) {
    case IndexView::Original: return -4;
    case IndexView::Shifted: return 0;
    case IndexView::Q: return -2;
    case IndexView::QBar: return -1;
  }
  return 0;
}

int last_index(IndexView view, int max_original) {
  switch (view) {
    case IndexView::Original: return max_original;
    case IndexView::Shifted: return max_original + 4;
    case IndexView::Q: return max_original >= 0 ? max_original / 2 : -((-max_original + 1) / 2);
    case IndexView::QBar: return last_index(IndexView::Q, max_original) - 1;
  }
  return max_original;
}

Rational PolynomialFamily::initial_value(FamilyId id, int k) {
  const int one_at = id == FamilyId::P4 ? -4 : id == FamilyId::P3 ? -3 : id == FamilyId::P2 ? -2 : -1;
  return Rational(k == one_at ? 1 : 0);
}

PolynomialFamily::PolynomialFamily(FamilyId id, int max_original) : id_(id) {
  const int top = std::max(max_original, -1);
  members_.reserve(static_cast<std::size_t>(top + 5));
  for (int k = -4; k <= -1; ++k) members_.push_back(RationalPoly::constant(initial_value(id, k)));
  const RationalPoly c = RationalPoly::variable();
  for (int k = 0; k <= top; ++k) {
    RationalPoly next = c * members_[static_cast<std::size_t>(k + 2)] * Rational(4 * k) -
                        members_[static_cast<std::size_t>(k)] * Rational(2 * (k - 3));
    next *= Rational(1, 6 + 2 * k);
    members_.push_back(std::move(next));
  }
  if (auto bad = first_parity_violation()) {
    throw std::logic_error(std::string(family_name(id)) + " member at k=" + std::to_string(*bad) +
                           " breaks the expected vanishing pattern");
  }
}

const RationalPoly& PolynomialFamily::original(int k) const {
  if (k < -4 || k > max_original()) {
    throw std::out_of_range(std::string(family_name(id_)) + " index " + std::to_string(k) +
                            " outside generated range [-4, " + std::to_string(max_original()) + "]");
  }
  return members_[static_cast<std::size_t>(k + 4)];
}

std::optional<int> PolynomialFamily::first_recurrence_violation() const {
  const RationalPoly c = RationalPoly::variable();
  for (int k = 0; k <= max_original(); ++k) {
    const RationalPoly lhs = original(k) * Rational(6 + 2 * k);
    const RationalPoly rhs = c * original(k - 2) * Rational(4 * k) - original(k - 4) * Rational(2 * (k - 3));
    if (lhs != rhs) return k;
  }
  return std::nullopt;
}

std::optional<int> PolynomialFamily::first_parity_violation() const {
  const bool vanish_odd = id_ == FamilyId::P4 || id_ == FamilyId::P2;
  for (int k = -4; k <= max_original(); ++k) {
    const bool odd = (k % 2) != 0;
    const bool must_vanish = vanish_odd ? odd : (!odd && k >= 0);
    if (must_vanish && !original(k).is_zero()) return k;
    // Surviving members are even or odd in c according to their index.
    const RationalPoly& p = original(k);
    if (!p.is_zero() && k >= 0) {
      const int offset = id_ == FamilyId::P4 ? 0 : id_ == FamilyId::P2 ? 2 : id_ == FamilyId::P3 ? 1 : -1;
      const bool odd_degree = ((k - offset) / 2) % 2 != 0;
      if (odd_degree ? !p.is_odd() : !p.is_even()) return k;
    }
  }
  return std::nullopt;
}

FamilyTable generate(FamilyId id, IndexView view, int max_index) {
  const int first = first_index(view);
  FamilyTable table{id, view, first, {}};
  if (max_index < first) return table;
  const PolynomialFamily family(id, to_original(view, max_index));
  for (int n = first; n <= max_index; ++n) table.entries.push_back(family.at(view, n));
  return table;
}

std::vector<RationalPoly> gegenbauer_sequence(const Rational& lambda, int n_max) {
  std::vector<RationalPoly> out;
  if (n_max < 0) return out;
  out.push_back(RationalPoly::constant(Rational(1)));
  if (n_max == 0) return out;
  const RationalPoly c = RationalPoly::variable();
  out.push_back(c * (lambda * Rational(2)));
  for (int n = 2; n <= n_max; ++n) {
    RationalPoly next = c * out[static_cast<std::size_t>(n - 1)] * (Rational(2) * (Rational(n - 1) + lambda)) -
                        out[static_cast<std::size_t>(n - 2)] * (Rational(n - 2) + lambda * Rational(2));
    out.push_back(next * Rational(1, n));
  }
  return out;
}

RationalPoly gegenbauer(const Rational& lambda, int n) {
  if (n < 0) throw std::invalid_argument("gegenbauer degree must be >= 0");
  return gegenbauer_sequence(lambda, n).back();
}

GegenbauerLink verify_gegenbauer_link(int n, const PolynomialFamily& p3, const PolynomialFamily& p1) {
  GegenbauerLink out;
  out.n = n;
  const int k = 2 * n - 3;
  out.p3 = p3.original(k);
  out.p1 = p1.original(k);
  const RationalPoly q = gegenbauer(Rational(-1, 2), n);
  const RationalPoly c2m1{Rational(-1), Rational(0), Rational(1)};
  try {
    const RationalPoly closed = -q.exact_divide(c2m1);
    out.divisible = true;
    out.p3_matches = closed == out.p3;
    if (!out.p3_matches) {
      out.diagnostic = "P_{-3," + std::to_string(k) + "} = " + out.p3.to_string() + " but -Q_n/(c^2-1) = " +
                       closed.to_string();
    }
  } catch (const Error& e) {
    out.diagnostic = e.what();
  }
  out.p1_matches = out.p1 == RationalPoly::variable() * out.p3;
  if (!out.p1_matches && out.diagnostic.empty()) {
    out.diagnostic = "P_{-1," + std::to_string(k) + "} = " + out.p1.to_string() + " is not c*P_{-3," +
                     std::to_string(k) + "}";
  }
  return out;
}

GegenbauerLink verify_gegenbauer_link(int n) {
  if (n < 2) throw std::invalid_argument("Gegenbauer link holds for n >= 2");
  const PolynomialFamily p3(FamilyId::P3, 2 * n - 3);
  const PolynomialFamily p1(FamilyId::P1, 2 * n - 3);
  return verify_gegenbauer_link(n, p3, p1);
}

}  // namespace djkm
