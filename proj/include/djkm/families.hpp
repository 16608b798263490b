#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "djkm/rational_poly.hpp"

namespace djkm {

/// The four coefficient families, named by which initial condition is 1:
/// P4 has P_{-4} = 1, P3 has P_{-3} = 1, and so on; the other three are 0.
enum class FamilyId { P4, P3, P2, P1 };

/// Index conventions layered over the original index k >= -4:
///   shifted n = k + 4,  q_s = P_{2s},  qbar_n = q_{n+1}.
enum class IndexView { Original, Shifted, Q, QBar };

std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);
std::string_view view_name(IndexView view);
std::optional<IndexView> parse_view(std::string_view name);

/// Original index addressed by index n of a view.
int to_original(IndexView view, int n);
/// Smallest index a view exposes: -4 (original), 0 (shifted), -2 (q), -1 (qbar).
int first_index(IndexView view);
/// Largest view index whose original index does not exceed max_original.
int last_index(IndexView view, int max_original);

/// Exact family members generated from the four initial values by
///   (6 + 2k) P_k = 4kc P_{k-2} - 2(k - 3) P_{k-4},  k >= 0.
///
/// All members up to max_original are computed at construction; the object
/// is immutable afterwards and safe to share across threads.
class PolynomialFamily {
 public:
  PolynomialFamily(FamilyId id, int max_original);

  FamilyId id() const { return id_; }
  int max_original() const { return static_cast<int>(members_.size()) - 5; }

  /// P_k in original indexing; throws std::out_of_range outside [-4, max_original()].
  const RationalPoly& original(int k) const;
  const RationalPoly& at(IndexView view, int n) const { return original(to_original(view, n)); }

  static Rational initial_value(FamilyId id, int k);

  /// Re-checks the recurrence for every stored index; returns the first
  /// failing k or nothing.
  std::optional<int> first_recurrence_violation() const;
  /// Checks the vanishing pattern: P4/P2 vanish at odd k, P3/P1 at even k >= 0.
  std::optional<int> first_parity_violation() const;

 private:
  FamilyId id_;
  std::vector<RationalPoly> members_;  // members_[k + 4]
};

struct FamilyTable {
  FamilyId family;
  IndexView view;
  int first;
  std::vector<RationalPoly> entries;

  int last() const { return first + static_cast<int>(entries.size()) - 1; }
  const RationalPoly& at(int n) const { return entries.at(static_cast<std::size_t>(n - first)); }
};

/// Members of a family in the requested view, from first_index(view) through max_index.
FamilyTable generate(FamilyId id, IndexView view, int max_index);

/// Gegenbauer polynomial C_n^(lambda)(c) from
///   n C_n = 2(n + lambda - 1) c C_{n-1} - (n + 2 lambda - 2) C_{n-2}.
RationalPoly gegenbauer(const Rational& lambda, int n);
/// C_0 .. C_{n_max}.
std::vector<RationalPoly> gegenbauer_sequence(const Rational& lambda, int n_max);

struct GegenbauerLink {
  int n = 0;
  bool divisible = false;        // (c^2 - 1) | Q_n^(-1/2)
  bool p3_matches = false;       // P_{-3,2n-3} == -Q_n / (c^2 - 1)
  bool p1_matches = false;       // P_{-1,2n-3} == c P_{-3,2n-3}
  RationalPoly p3;
  RationalPoly p1;
  std::string diagnostic;

  bool passed() const { return divisible && p3_matches && p1_matches; }
};

/// Checks both Gegenbauer closed forms at a given n >= 2 against the recurrence.
GegenbauerLink verify_gegenbauer_link(int n);
GegenbauerLink verify_gegenbauer_link(int n, const PolynomialFamily& p3, const PolynomialFamily& p1);

}  // namespace djkm
