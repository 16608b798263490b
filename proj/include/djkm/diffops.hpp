#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "djkm/families.hpp"
#include "djkm/rational_poly.hpp"

namespace djkm {

/// sum_i coeffs[i] (d/dc)^i with polynomial coefficients.
class LinearDiffOp {
 public:
  LinearDiffOp() = default;
  explicit LinearDiffOp(std::vector<RationalPoly> coeffs);

  /// Highest derivative with a nonzero coefficient; -1 for the zero operator.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalPoly>& coeffs() const { return coeffs_; }
  const RationalPoly& coeff(int i) const;

  RationalPoly apply(const RationalPoly& p) const;
  /// deg coeff(i) <= i for every i.
  bool has_degree_profile() const;

  LinearDiffOp& operator+=(const LinearDiffOp& rhs);
  LinearDiffOp& operator*=(const Rational& rhs);
  friend LinearDiffOp operator+(LinearDiffOp lhs, const LinearDiffOp& rhs) { return lhs += rhs; }
  friend LinearDiffOp operator*(LinearDiffOp lhs, const Rational& rhs) { return lhs *= rhs; }
  friend bool operator==(const LinearDiffOp&, const LinearDiffOp&) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<RationalPoly> coeffs_;
};

inline RationalPoly apply(const LinearDiffOp& op, const RationalPoly& p) { return op.apply(p); }

/// (1 - c^2) D^2 - (2 lambda + 1) c D + n (n + 2 lambda).
LinearDiffOp build_gegenbauer_op(const Rational& lambda, int n);
/// (c^4 - c^2) D^2 + 2c (c^2 + 1) D - c^2 n (n - 1) - 2; annihilates P_{-1,2n-3}.
LinearDiffOp build_case3_op(int n);
/// (c^2 - 1) D^2 + 4c D - (n + 1)(n - 2); annihilates P_{-3,2n-3}.
LinearDiffOp build_case4_op(int n);
/// Fourth-order operator for P-4 in shifted indexing.
LinearDiffOp build_elliptic1_op(int n);
/// Fourth-order operator for P-2 in shifted indexing.
LinearDiffOp build_elliptic2_op(int n);
/// Fourth-order operator for q_n = P_{-4,2n+4} (shifted) in the variable x.
LinearDiffOp build_qform_op(int n);
/// Associated Jacobi fourth-order operator A0 D^4 + A1 D^3 + A2 D^2 + A3 D + A4,
/// transcribed as published with gamma = alpha + beta + 1,
/// K = (n + c)(n + gamma + c), C = (c - 1)(c + alpha + beta).
LinearDiffOp build_wimp_op(int n, const Rational& alpha, const Rational& beta, const Rational& assoc_c);

/// apply(op, member); the zero polynomial means the member is annihilated.
RationalPoly eigencheck(const LinearDiffOp& op, FamilyId family, IndexView view, int n);

struct OdeCheck {
  int n = 0;
  int original_index = 0;
  bool member_zero = false;  // the family member itself vanishes, so the check is trivial
  RationalPoly residual;
  bool passed() const { return residual.is_zero(); }
};

/// Which operator a sweep uses, keyed by the CLI family names.
enum class OdeTarget { P4, P3, P2, P1, Q, QBar };

struct OdeSweep {
  OdeTarget target = OdeTarget::P4;
  std::string operator_name;
  std::vector<OdeCheck> checks;
  bool all_passed() const;
};

std::string_view ode_target_name(OdeTarget target);
std::optional<OdeTarget> parse_ode_target(std::string_view name);
/// Smallest index the target's operator is stated for.
int ode_first_index(OdeTarget target);

/// Checks every index from ode_first_index(target) through max_n:
///   P4 / P2 use the elliptic operators in shifted indexing (every n, odd included),
///   P3 / P1 use case4 / case3 on original index 2n - 3,
///   q uses the q-form operator, qbar uses elliptic2 at shifted 2n + 6.
OdeSweep verify_ode(OdeTarget target, int max_n, unsigned threads = 1);

}  // namespace djkm
