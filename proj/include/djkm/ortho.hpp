#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "djkm/families.hpp"
#include "djkm/rational_poly.hpp"

namespace djkm {

/// q_n = P_{-4,2n} and qbar_n = P_{-2,2n+2} in original indexing, n >= 0.
enum class OrthoFamily { Q, QBar };

std::string_view ortho_family_name(OrthoFamily family);
std::optional<OrthoFamily> parse_ortho_family(std::string_view name);

/// p_0 .. p_n_max of the family, with c read as x.
std::vector<RationalPoly> ortho_members(OrthoFamily family, int n_max);

/// x p_n = A(n+1) p_{n+1} + B(n) p_n + C(n-1) p_{n-1}, with C(-1) = 0 by convention.
struct ThreeTermData {
  OrthoFamily family;
  /// Coefficient of p_{n+1} in the relation for x p_n, i.e. A_{n+1}.
  Rational upper(int n) const;
  Rational diag(int n) const;
  /// Coefficient of p_{n-1} in the relation for x p_n, i.e. C_{n-1}.
  Rational lower(int n) const;
};

/// Symmetric Jacobi matrix of the orthonormalised family: zero diagonal,
/// off-diagonal beta_n with beta_n^2 = A_n C_{n-1}, n >= 1.
struct JacobiData {
  OrthoFamily family;
  Rational diag(int n) const;
  Rational offdiag_sq(int n) const;
  double offdiag(int n) const;
};

/// lambda_0^2 = 1, lambda_n^2 = (n+1)(2n+1) / ((n+2)(2n+5)) lambda_{n-1}^2.
std::vector<Rational> favard_lambdas(int n);
/// A_n^2 == C_{n-1}^2 for the rescaled recurrence, 1 <= n <= n_max.
bool favard_symmetrized(int n_max);

/// m_0 .. m_k of the orthogonality functional with m_0 = 1.
std::vector<Rational> moments(OrthoFamily family, int k);
/// Delta_1 .. Delta_n, Delta_N = det[m_{i+j}]_{0 <= i,j < N}.
std::vector<Rational> hankel(OrthoFamily family, int n);
/// L(p) for the moment functional.
Rational moment_functional(const RationalPoly& p, const std::vector<Rational>& moments);

struct GramReport {
  OrthoFamily family;
  int n = 0;
  std::vector<std::vector<Rational>> gram;  // gram[i][j] = L(p_i p_j)
  bool orthogonal = false;                  // every off-diagonal entry is zero
  bool positive = false;                    // every diagonal entry is positive
  bool passed() const { return orthogonal && positive; }
};
GramReport gram_check(OrthoFamily family, int n);

/// How the eigenvalue of (ax^2+bx+c)D^2 + (ex+f)D + g on p_n is prescribed.
enum class EigenRule {
  AsPrinted,          // a n(n-1) + b n + c + e n + f + g
  LeadingCoefficient  // a n(n-1) + e n + g, forced by matching the top coefficient
};

struct ChainStep {
  std::string constraint;  // e.g. "c+f=0"
  int through_n = 0;       // equations from p_0 .. p_{through_n}
  bool implied = false;
};

struct NonclassicalWitness {
  OrthoFamily family;
  EigenRule rule;
  int max_n = 0;
  std::vector<std::string> unknowns;                 // a b c e f g
  std::vector<std::vector<Rational>> equations;      // nonzero rows
  std::vector<int> equation_n;                       // p_n each row came from
  int rank = 0;
  int solution_space_dim = 0;
  std::vector<std::vector<Rational>> solution_basis;
  bool constants_only = false;  // the solution space is spanned by g
  std::vector<ChainStep> chain;
};

NonclassicalWitness nonclassical_check(OrthoFamily family, int max_n, EigenRule rule = EigenRule::AsPrinted);
/// Same system for an arbitrary sequence p_0, p_1, ... with deg p_n = n.
NonclassicalWitness nonclassical_system(const std::vector<RationalPoly>& members, EigenRule rule);

/// 2x(n+nu+c) C_n = (n+c+1) C_{n+1} + (2nu+n+c-1) C_{n-1}; C_-1 = 0, C_0 = 1.
std::vector<RationalPoly> assoc_ultraspherical(const Rational& nu, const Rational& assoc_c, int n);
/// Associated Jacobi recurrence with gamma = alpha + beta + 1; P_-1 = 0, P_0 = 1.
std::vector<RationalPoly> assoc_jacobi(const Rational& alpha, const Rational& beta, const Rational& assoc_c, int n);

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  double max_residual = 0.0;
};

/// Gauss rule from the n x n Jacobi matrix; raises NONCONVERGENCE when an
/// eigenpair misses the residual bound.
Quadrature golub_welsch(OrthoFamily family, int n, double residual_bound = 1e-12);

struct QuadOrthogonality {
  double max_offdiag = 0.0;
  double min_diag = 0.0;
};
QuadOrthogonality quad_orthogonality(OrthoFamily family, int n_quad, int max_deg);

/// Gauss series sum (a)_k (b)_k / (c)_k z^k / k!. Raises NO_CONVERGENCE for
/// |z| > 1, for |z| = 1 unless Re(c - a - b) > 0, for c a non-positive integer,
/// and when max_terms is reached before the tail estimate drops below tol.
std::complex<double> hyp2f1(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                            std::complex<double> z, double tol = 1e-15, long max_terms = 20'000'000);

}  // namespace djkm
