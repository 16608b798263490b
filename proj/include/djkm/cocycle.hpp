#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "djkm/families.hpp"
#include "djkm/rational_poly.hpp"

namespace djkm {

/// Class in the center: w0 * omega_0 + sum_k w(k) * omega_k, k in {-1, -2, -3, -4},
/// where omega_0 = t^-1 dt and omega_k = t^k u dt.
class OmegaVector {
 public:
  static OmegaVector omega(int k);  // basis vector; k in {0, -1, -2, -3, -4}

  const RationalPoly& w0() const { return parts_[0]; }
  const RationalPoly& w(int k) const;
  RationalPoly& w(int k);

  bool is_zero() const;

  OmegaVector& operator+=(const OmegaVector& rhs);
  OmegaVector& operator-=(const OmegaVector& rhs);
  OmegaVector& operator*=(const RationalPoly& rhs);
  friend OmegaVector operator+(OmegaVector lhs, const OmegaVector& rhs) { return lhs += rhs; }
  friend OmegaVector operator-(OmegaVector lhs, const OmegaVector& rhs) { return lhs -= rhs; }
  friend OmegaVector operator*(OmegaVector lhs, const RationalPoly& rhs) { return lhs *= rhs; }
  friend OmegaVector operator*(const RationalPoly& lhs, OmegaVector rhs) { return rhs *= lhs; }
  friend bool operator==(const OmegaVector&, const OmegaVector&) = default;

  std::string to_string() const;

 private:
  std::array<RationalPoly, 5> parts_;  // [0] = w0, [k] = coefficient of omega_{-k}
};

inline std::ostream& operator<<(std::ostream& os, const OmegaVector& v) { return os << v.to_string(); }

/// t^exponent, times u when has_u.
struct RMonomial {
  int exponent = 0;
  bool has_u = false;
};

/// Classes of t^k u dt for every k in [-reach - 4, reach], built once.
/// The relation (6 + 2m) t^m u dt = 4mc t^{m-2} u dt - 2(m - 3) t^{m-4} u dt
/// is used downward for k >= 0 and solved for the lowest term for k <= -5.
class ReductionTable {
 public:
  explicit ReductionTable(int reach);
  int reach() const { return reach_; }
  const OmegaVector& at(int k) const;
  /// First m in [-reach, reach] where the stored classes break the relation.
  std::optional<int> first_relation_violation() const;

 private:
  int reach_;
  std::vector<OmegaVector> classes_;  // classes_[k + reach + 4]
};

OmegaVector reduce_u_monomial(int k);
/// Class of t^a dt: omega_0 when a = -1, else exact.
OmegaVector reduce_plain(int a);

/// Class of f dg. Pairs with a plain f and u-valued g are rewritten as -g df
/// when allow_antisymmetry is set; otherwise they raise UNSUPPORTED_PAIR.
OmegaVector cocycle(const RMonomial& f, const RMonomial& g, bool allow_antisymmetry = true);
OmegaVector cocycle(const RMonomial& f, const RMonomial& g, const ReductionTable& table,
                    bool allow_antisymmetry = true);

/// The closed-form table value psi_ij written in family polynomials. For
/// i + j <= -3 the family index is |i + j| - 2, as in the even branch.
OmegaVector psi(int i, int j);

struct PsiCase {
  int i = 0;
  int j = 0;
  OmegaVector engine;
  OmegaVector table;
};

struct CocycleReport {
  int bound = 0;
  int psi_checked = 0;
  int uu_checked = 0;
  int antisymmetry_checked = 0;
  std::vector<PsiCase> psi_failures;
  std::vector<std::pair<int, int>> uu_failures;
  std::vector<std::pair<RMonomial, RMonomial>> antisymmetry_failures;
  bool relation_consistent = false;
  bool passed() const {
    return psi_failures.empty() && uu_failures.empty() && antisymmetry_failures.empty() && relation_consistent;
  }
};

/// For |i|, |j| <= bound:
///   cocycle(t^{i-1}u, t^j) == j psi(i, j)  (j != 0),
///   cocycle(t^{i-1}u, t^{j-1}u) == ((j+1) d_{i+j,-2} - 2cj d_{i+j,0} + (j-1) d_{i+j,2}) omega_0,
///   cocycle(f, g) + cocycle(g, f) == 0 over all four monomial shapes.
CocycleReport verify_psi_table(int bound, unsigned threads = 1);

}  // namespace djkm
