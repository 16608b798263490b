#include "djkm/cocycle.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "djkm/error.hpp"
#include "djkm/parallel.hpp"

namespace djkm {

namespace {

std::size_t slot(int k) {
  if (k > 0 || k < -4) throw std::out_of_range("omega index " + std::to_string(k) + " outside {0, -1, .., -4}");
  return static_cast<std::size_t>(-k);
}

}  // namespace

OmegaVector OmegaVector::omega(int k) {
  OmegaVector v;
  v.parts_[slot(k)] = RationalPoly::constant(Rational(1));
  return v;
}

const RationalPoly& OmegaVector::w(int k) const { return parts_[slot(k)]; }
RationalPoly& OmegaVector::w(int k) { return parts_[slot(k)]; }

bool OmegaVector::is_zero() const {
  for (const auto& p : parts_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

OmegaVector& OmegaVector::operator+=(const OmegaVector& rhs) {
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += rhs.parts_[i];
  return *this;
}

OmegaVector& OmegaVector::operator-=(const OmegaVector& rhs) {
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] -= rhs.parts_[i];
  return *this;
}

OmegaVector& OmegaVector::operator*=(const RationalPoly& rhs) {
  for (auto& p : parts_) p *= rhs;
  return *this;
}

std::string OmegaVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << parts_[i].to_string() << ")*w" << (i == 0 ? "0" : "-" + std::to_string(i));
  }
  if (first) os << "0";
  return os.str();
}

ReductionTable::ReductionTable(int reach) : reach_(std::max(reach, 0)) {
  const int lo = -reach_ - 4;
  classes_.resize(static_cast<std::size_t>(reach_ + reach_ + 5));
  auto ref = [&](int k) -> OmegaVector& { return classes_[static_cast<std::size_t>(k - lo)]; };
  for (int k = -4; k <= -1; ++k) ref(k) = OmegaVector::omega(k);
  const RationalPoly c = RationalPoly::variable();
  for (int k = 0; k <= reach_; ++k) {
    OmegaVector v = ref(k - 2) * (c * Rational(4 * k)) - ref(k - 4) * RationalPoly::constant(Rational(2 * (k - 3)));
    ref(k) = v * RationalPoly::constant(Rational(1, 6 + 2 * k));
  }
  for (int k = -5; k >= lo; --k) {
    OmegaVector v =
        ref(k + 2) * (c * Rational(4 * (k + 4))) - ref(k + 4) * RationalPoly::constant(Rational(14 + 2 * k));
    ref(k) = v * RationalPoly::constant(Rational(1, 2 * (k + 1)));
  }
}

const OmegaVector& ReductionTable::at(int k) const {
  if (k > reach_ || k < -reach_ - 4) {
    throw std::out_of_range("t^" + std::to_string(k) + " u dt outside reduction table reach " + std::to_string(reach_));
  }
  return classes_[static_cast<std::size_t>(k + reach_ + 4)];
}

std::optional<int> ReductionTable::first_relation_violation() const {
  const RationalPoly c = RationalPoly::variable();
  for (int m = -reach_; m <= reach_; ++m) {
    const OmegaVector lhs = at(m) * RationalPoly::constant(Rational(6 + 2 * m));
    const OmegaVector rhs =
        at(m - 2) * (c * Rational(4 * m)) - at(m - 4) * RationalPoly::constant(Rational(2 * (m - 3)));
    if (lhs != rhs) return m;
  }
  return std::nullopt;
}

OmegaVector reduce_u_monomial(int k) { return ReductionTable(std::abs(k)).at(k); }

OmegaVector reduce_plain(int a) { return a == -1 ? OmegaVector::omega(0) : OmegaVector(); }

OmegaVector cocycle(const RMonomial& f, const RMonomial& g, const ReductionTable& table, bool allow_antisymmetry) {
  const int a = f.exponent;
  const int b = g.exponent;
  const int m = a + b;
  const RationalPoly bb = RationalPoly::constant(Rational(b));
  if (!f.has_u && !g.has_u) return reduce_plain(m - 1) * bb;
  if (f.has_u && !g.has_u) return table.at(m - 1) * bb;
  if (f.has_u && g.has_u) {
    // t^a u d(t^b u) = (b t^{m-1} p + t^m p'/2) dt with p = t^4 - 2ct^2 + 1
    //                = ((b + 2) t^{m+3} - 2c(b + 1) t^{m+1} + b t^{m-1}) dt
    const RationalPoly c = RationalPoly::variable();
    return reduce_plain(m + 3) * RationalPoly::constant(Rational(b + 2)) + reduce_plain(m + 1) * (c * Rational(-2 * (b + 1))) +
           reduce_plain(m - 1) * bb;
  }
  if (!allow_antisymmetry) {
    throw Error(ErrorCode::UnsupportedPair, "t^" + std::to_string(a) + " d(t^" + std::to_string(b) +
                                                " u) needs the antisymmetry rewrite");
  }
  // f dg = -g df modulo exact forms.
  return cocycle(g, f, table, false) * RationalPoly::constant(Rational(-1));
}

OmegaVector cocycle(const RMonomial& f, const RMonomial& g, bool allow_antisymmetry) {
  const int reach = std::abs(f.exponent + g.exponent) + 1;
  return cocycle(f, g, ReductionTable(reach), allow_antisymmetry);
}

namespace {

OmegaVector psi_from(int s, const PolynomialFamily& p4, const PolynomialFamily& p3, const PolynomialFamily& p2) {
  if (s >= -2 && s <= 1) return OmegaVector::omega(s - 2);
  const RationalPoly c = RationalPoly::variable();
  const int k = std::abs(s) - 2;
  OmegaVector out;
  if (s % 2 == 0) {
    out.w(-4) = p4.original(k);
    out.w(-2) = p2.original(k);
  } else if (s > 0) {
    out.w(-3) = p3.original(k);
    out.w(-1) = c * p3.original(k);
  } else {
    out.w(-3) = c * p3.original(k);
    out.w(-1) = p3.original(k);
  }
  return out;
}

}  // namespace

OmegaVector psi(int i, int j) {
  const int top = std::max(std::abs(i + j) - 2, 0);
  return psi_from(i + j, PolynomialFamily(FamilyId::P4, top), PolynomialFamily(FamilyId::P3, top),
                  PolynomialFamily(FamilyId::P2, top));
}

CocycleReport verify_psi_table(int bound, unsigned threads) {
  if (bound < 1) throw std::invalid_argument("verify_psi_table needs bound >= 1");
  CocycleReport report;
  report.bound = bound;
  const ReductionTable table(2 * bound + 4);
  report.relation_consistent = !table.first_relation_violation().has_value();
  const int top = 2 * bound;
  const PolynomialFamily p4(FamilyId::P4, top), p3(FamilyId::P3, top), p2(FamilyId::P2, top);
  const RationalPoly c = RationalPoly::variable();

  const int width = 2 * bound + 1;
  std::mutex guard;
  int psi_checked = 0, uu_checked = 0, anti_checked = 0;
  parallel_for(static_cast<std::size_t>(width), threads, [&](std::size_t row) {
    const int i = static_cast<int>(row) - bound;
    std::vector<PsiCase> psi_bad;
    std::vector<std::pair<int, int>> uu_bad;
    std::vector<std::pair<RMonomial, RMonomial>> anti_bad;
    int np = 0, nu = 0, na = 0;
    for (int j = -bound; j <= bound; ++j) {
      if (j != 0) {
        const OmegaVector engine = cocycle({i - 1, true}, {j, false}, table);
        const OmegaVector expected = psi_from(i + j, p4, p3, p2) * RationalPoly::constant(Rational(j));
        ++np;
        if (engine != expected) psi_bad.push_back({i, j, engine, expected});
      }
      OmegaVector uu_expected;
      const int s = i + j;
      if (s == -2) uu_expected.w(0) = RationalPoly::constant(Rational(j + 1));
      if (s == 0) uu_expected.w(0) = c * Rational(-2 * j);
      if (s == 2) uu_expected.w(0) = RationalPoly::constant(Rational(j - 1));
      ++nu;
      if (cocycle({i - 1, true}, {j - 1, true}, table) != uu_expected) uu_bad.emplace_back(i, j);

      for (bool fu : {false, true}) {
        for (bool gu : {false, true}) {
          const RMonomial f{i, fu}, g{j, gu};
          ++na;
          if (!(cocycle(f, g, table) + cocycle(g, f, table)).is_zero()) anti_bad.emplace_back(f, g);
        }
      }
    }
    std::lock_guard lock(guard);
    psi_checked += np;
    uu_checked += nu;
    anti_checked += na;
    report.psi_failures.insert(report.psi_failures.end(), psi_bad.begin(), psi_bad.end());
    report.uu_failures.insert(report.uu_failures.end(), uu_bad.begin(), uu_bad.end());
    report.antisymmetry_failures.insert(report.antisymmetry_failures.end(), anti_bad.begin(), anti_bad.end());
  });
  std::sort(report.psi_failures.begin(), report.psi_failures.end(),
            [](const PsiCase& x, const PsiCase& y) { return std::pair(x.i, x.j) < std::pair(y.i, y.j); });
  std::sort(report.uu_failures.begin(), report.uu_failures.end());
  std::sort(report.antisymmetry_failures.begin(), report.antisymmetry_failures.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.first.exponent, x.first.has_u, x.second.exponent, x.second.has_u) <
           std::tuple(y.first.exponent, y.first.has_u, y.second.exponent, y.second.has_u);
  });
  report.psi_checked = psi_checked;
  report.uu_checked = uu_checked;
  report.antisymmetry_checked = anti_checked;
  return report;
}

}  // namespace djkm
