#include "djkm/diffops.hpp"

#include <sstream>
#include <stdexcept>

#include "djkm/parallel.hpp"

namespace djkm {

namespace {

RationalPoly cpoly(std::initializer_list<Rational> coeffs) { return RationalPoly(coeffs); }

}  // namespace

LinearDiffOp::LinearDiffOp(std::vector<RationalPoly> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void LinearDiffOp::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const RationalPoly& LinearDiffOp::coeff(int i) const {
  static const RationalPoly zero;
  if (i < 0 || i > order()) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

RationalPoly LinearDiffOp::apply(const RationalPoly& p) const {
  RationalPoly out;
  RationalPoly d = p;
  for (std::size_t i = 0; i < coeffs_.size() && !d.is_zero(); ++i) {
    if (!coeffs_[i].is_zero()) out += coeffs_[i] * d;
    d = d.derivative();
  }
  return out;
}

bool LinearDiffOp::has_degree_profile() const {
  for (int i = 0; i <= order(); ++i) {
    if (coeff(i).degree() > i) return false;
  }
  return true;
}

LinearDiffOp& LinearDiffOp::operator+=(const LinearDiffOp& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

LinearDiffOp& LinearDiffOp::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

std::string LinearDiffOp::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    if (coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff(i).to_string() << ")";
    if (i > 0) os << "*D^" << i;
  }
  if (first) os << "0";
  return os.str();
}

LinearDiffOp build_gegenbauer_op(const Rational& lambda, int n) {
  if (n < 0) throw std::invalid_argument("gegenbauer operator needs n >= 0");
  return LinearDiffOp({RationalPoly::constant(Rational(n) * (Rational(n) + lambda * Rational(2))),
                       cpoly({Rational(0), -(lambda * Rational(2) + Rational(1))}),
                       cpoly({Rational(1), Rational(0), Rational(-1)})});
}

LinearDiffOp build_case3_op(int n) {
  if (n < 2) throw std::invalid_argument("case3 operator needs n >= 2");
  return LinearDiffOp({cpoly({Rational(-2), Rational(0), Rational(-n * (n - 1))}),
                       cpoly({Rational(0), Rational(2), Rational(0), Rational(2)}),
                       cpoly({Rational(0), Rational(0), Rational(-1), Rational(0), Rational(1)})});
}

LinearDiffOp build_case4_op(int n) {
  if (n < 2) throw std::invalid_argument("case4 operator needs n >= 2");
  return LinearDiffOp({RationalPoly::constant(Rational(-(n + 1) * (n - 2))), cpoly({Rational(0), Rational(4)}),
                       cpoly({Rational(-1), Rational(0), Rational(1)})});
}

namespace {

// 16(c^2-1)^2 D^4 + 160c(c^2-1) D^3 - 8(c^2 a - b) D^2 - 24 c e D + f.
LinearDiffOp elliptic_shape(long a, long b, long e, const Rational& f) {
  return LinearDiffOp({RationalPoly::constant(f), cpoly({Rational(0), Rational(-24 * e)}),
                       cpoly({Rational(8 * b), Rational(0), Rational(-8 * a)}),
                       cpoly({Rational(0), Rational(-160), Rational(0), Rational(160)}),
                       cpoly({Rational(16), Rational(0), Rational(-32), Rational(0), Rational(16)})});
}

}  // namespace

LinearDiffOp build_elliptic1_op(int n) {
  if (n < 0) throw std::invalid_argument("elliptic1 operator needs n >= 0");
  const long m = n;
  return elliptic_shape(m * m - 4 * m - 46, m * m - 4 * m - 22, m * m - 4 * m - 6,
                        Rational((m - 4) * (m - 4) * m * m));
}

LinearDiffOp build_elliptic2_op(int n) {
  if (n < 0) throw std::invalid_argument("elliptic2 operator needs n >= 0");
  const long m = n;
  return elliptic_shape(m * m - 4 * m - 42, m * m - 4 * m - 18, m * m - 4 * m - 2,
                        Rational((m - 6) * (m - 2) * (m - 2) * (m + 2)));
}

LinearDiffOp build_qform_op(int n) {
  if (n < 0) throw std::invalid_argument("qform operator needs n >= 0");
  const long m = n;
  const long s = 2 * m * m + 4 * m;
  return LinearDiffOp({RationalPoly::constant(Rational(m * m * (m + 2) * (m + 2))),
                       cpoly({Rational(0), Rational(-3 * (s - 3))}),
                       cpoly({Rational(s - 11), Rational(0), Rational(-(s - 23))}),
                       cpoly({Rational(0), Rational(-10), Rational(0), Rational(10)}),
                       cpoly({Rational(1), Rational(0), Rational(-2), Rational(0), Rational(1)})});
}

LinearDiffOp build_wimp_op(int n, const Rational& alpha, const Rational& beta, const Rational& assoc_c) {
  const Rational nn(n);
  const Rational gamma = alpha + beta + Rational(1);
  const Rational k = (nn + assoc_c) * (nn + gamma + assoc_c);
  const Rational cc = (assoc_c - Rational(1)) * (assoc_c + alpha + beta);
  const RationalPoly one_minus_x = cpoly({Rational(1), Rational(-1)});
  const Rational two_k_c = Rational(2) * k + Rational(2) * cc;

  const RationalPoly a0 = cpoly({Rational(1), Rational(0), Rational(-2), Rational(0), Rational(1)});
  const RationalPoly a1 = cpoly({Rational(0), Rational(-10), Rational(0), Rational(10)});
  RationalPoly a2 = -(one_minus_x * one_minus_x) * (two_k_c + gamma * gamma - Rational(25));
  a2 += one_minus_x * (Rational(2) * (two_k_c + Rational(2) * alpha * gamma));
  a2 += RationalPoly::constant(Rational(2) * (alpha + Rational(1)) - Rational(26));
  RationalPoly a3 = one_minus_x * (Rational(3) * (two_k_c + gamma * gamma - Rational(5)));
  a3 -= RationalPoly::constant(Rational(6) * (k + cc + alpha * gamma + beta - Rational(2)));
  const Rational shift = nn + gamma + Rational(2) * assoc_c;
  const RationalPoly a4 = RationalPoly::constant(nn * (nn + Rational(2)) * shift * (shift - Rational(2)));
  return LinearDiffOp({a4, a3, a2, a1, a0});
}

RationalPoly eigencheck(const LinearDiffOp& op, FamilyId family, IndexView view, int n) {
  const PolynomialFamily members(family, to_original(view, n));
  return op.apply(members.at(view, n));
}

bool OdeSweep::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

std::string_view ode_target_name(OdeTarget target) {
  switch (target) {
    case OdeTarget::P4: return "P-4";
    case OdeTarget::P3: return "P-3";
    case OdeTarget::P2: return "P-2";
    case OdeTarget::P1: return "P-1";
    case OdeTarget::Q: return "q";
    case OdeTarget::QBar: return "qbar";
  }
  return "?";
}

std::optional<OdeTarget> parse_ode_target(std::string_view name) {
  if (name == "q") return OdeTarget::Q;
  if (name == "qbar") return OdeTarget::QBar;
  if (auto id = parse_family(name)) {
    switch (*id) {
      case FamilyId::P4: return OdeTarget::P4;
      case FamilyId::P3: return OdeTarget::P3;
      case FamilyId::P2: return OdeTarget::P2;
      case FamilyId::P1: return OdeTarget::P1;
    }
  }
  return std::nullopt;
}

int ode_first_index(OdeTarget target) {
  return target == OdeTarget::P3 || target == OdeTarget::P1 ? 2 : 0;
}

OdeSweep verify_ode(OdeTarget target, int max_n, unsigned threads) {
  OdeSweep sweep;
  sweep.target = target;
  const int first = ode_first_index(target);
  if (max_n < first) return sweep;

  FamilyId family = FamilyId::P4;
  int max_original = 0;
  switch (target) {
    case OdeTarget::P4: sweep.operator_name = "elliptic1"; max_original = max_n - 4; break;
    case OdeTarget::P2: sweep.operator_name = "elliptic2"; family = FamilyId::P2; max_original = max_n - 4; break;
    case OdeTarget::P3: sweep.operator_name = "case4"; family = FamilyId::P3; max_original = 2 * max_n - 3; break;
    case OdeTarget::P1: sweep.operator_name = "case3"; family = FamilyId::P1; max_original = 2 * max_n - 3; break;
    case OdeTarget::Q: sweep.operator_name = "qform"; max_original = 2 * max_n; break;
    case OdeTarget::QBar: sweep.operator_name = "elliptic2"; family = FamilyId::P2; max_original = 2 * max_n + 2; break;
  }
  const PolynomialFamily members(family, max_original);

  sweep.checks.resize(static_cast<std::size_t>(max_n - first + 1));
  parallel_for(sweep.checks.size(), threads, [&](std::size_t i) {
    const int n = first + static_cast<int>(i);
    OdeCheck& check = sweep.checks[i];
    check.n = n;
    LinearDiffOp op;
    switch (target) {
      case OdeTarget::P4: op = build_elliptic1_op(n); check.original_index = n - 4; break;
      case OdeTarget::P2: op = build_elliptic2_op(n); check.original_index = n - 4; break;
      case OdeTarget::P3: op = build_case4_op(n); check.original_index = 2 * n - 3; break;
      case OdeTarget::P1: op = build_case3_op(n); check.original_index = 2 * n - 3; break;
      case OdeTarget::Q: op = build_qform_op(n); check.original_index = 2 * n; break;
      case OdeTarget::QBar: op = build_elliptic2_op(2 * n + 6); check.original_index = 2 * n + 2; break;
    }
    const RationalPoly& member = members.original(check.original_index);
    check.member_zero = member.is_zero();
    check.residual = op.apply(member);
  });
  return sweep;
}

}  // namespace djkm
