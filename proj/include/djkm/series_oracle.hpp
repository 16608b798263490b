#pragma once

#include <optional>

#include "djkm/families.hpp"
#include "djkm/laurent_series.hpp"

namespace djkm {

/// A generating function expanded independently of the recurrence and compared
/// against it coefficient by coefficient.
struct OracleResult {
  FamilyId family = FamilyId::P4;
  int truncation = 0;
  LaurentSeries series;
  bool matched = false;
  std::optional<int> first_mismatch;
};

/// z sqrt(s) Int (4cz^2 - 1) / (z^2 s^{3/2}) dz with s = 1 - 2cz^2 + z^4,
/// normalised so the z^1 coefficient vanishes. Compared with P-4, shifted view.
OracleResult expand_elliptic1(int n);
/// z sqrt(s) Int s^{-3/2} dz. Compared with P-2, shifted view.
OracleResult expand_elliptic2(int n);
/// z sqrt(s) (sum 4c Q_k z^{2k+1}/(2k+1) - sum Q_k z^{2k-1}/(2k-1)), Q_k = C_k^{(3/2)}.
/// Compared with P-4, shifted view.
OracleResult expand_gegenbauer_sum(int n);

/// Compares a series with the shifted-view family members through z^n.
OracleResult compare_with_family(FamilyId id, int n, const LaurentSeries& series);

/// (z^5 - 2cz^3 + z) P' - (3z^4 - 4cz^2 + 1) P against
/// 2(P_{-1} + c P_{-3}) z^3 + P_{-2} z^2 + (4cz^2 - 1) P_{-4}, through z^n.
bool check_funde(int n, FamilyId family);

/// 1 - 2cz^2 + z^4 as a series known through z^trunc.
LaurentSeries quartic_series(int trunc);

}  // namespace djkm
