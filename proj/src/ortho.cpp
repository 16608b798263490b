#include "djkm/ortho.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "djkm/error.hpp"
#include "djkm/exact_linalg.hpp"

namespace djkm {

std::string_view ortho_family_name(OrthoFamily family) { return family == OrthoFamily::Q ? "q" : "qbar"; }

std::optional<OrthoFamily> parse_ortho_family(std::string_view name) {
  if (name == "q" || name == "P-4" || name == "P4") return OrthoFamily::Q;
  if (name == "qbar" || name == "P-2" || name == "P2") return OrthoFamily::QBar;
  return std::nullopt;
}

std::vector<RationalPoly> ortho_members(OrthoFamily family, int n_max) {
  std::vector<RationalPoly> out;
  if (n_max < 0) return out;
  const bool q = family == OrthoFamily::Q;
  const IndexView view = q ? IndexView::Q : IndexView::QBar;
  const PolynomialFamily members(q ? FamilyId::P4 : FamilyId::P2, to_original(view, n_max));
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) out.push_back(members.at(view, n));
  return out;
}

Rational ThreeTermData::upper(int n) const {
  return family == OrthoFamily::Q ? Rational(2 * n + 5, 4 * (n + 1)) : Rational(2 * n + 7, 4 * (n + 2));
}

Rational ThreeTermData::diag(int) const { return Rational(0); }

Rational ThreeTermData::lower(int n) const {
  if (n <= 0) return Rational(0);
  return family == OrthoFamily::Q ? Rational(2 * n - 1, 4 * (n + 1)) : Rational(2 * n + 1, 4 * (n + 2));
}

Rational JacobiData::diag(int) const { return Rational(0); }

Rational JacobiData::offdiag_sq(int n) const {
  if (n < 1) throw std::out_of_range("beta_n is defined for n >= 1");
  const ThreeTermData t{family};
  return t.upper(n - 1) * t.lower(n);
}

double JacobiData::offdiag(int n) const { return std::sqrt(offdiag_sq(n).to_double()); }

std::vector<Rational> favard_lambdas(int n) {
  std::vector<Rational> out;
  if (n < 0) return out;
  out.push_back(Rational(1));
  for (int k = 1; k <= n; ++k) {
    out.push_back(out.back() * Rational((k + 1) * (2 * k + 1), (k + 2) * (2 * k + 5)));
  }
  return out;
}

bool favard_symmetrized(int n_max) {
  // A_n = (2n+5) lambda_n / (4(n+1) lambda_{n-1}),  C_{n-1} = (2n+1) lambda_{n-1} / (4(n+2) lambda_n).
  const std::vector<Rational> l2 = favard_lambdas(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const Rational ln = l2[static_cast<std::size_t>(n)];
    const Rational lp = l2[static_cast<std::size_t>(n - 1)];
    const Rational a_sq = Rational((2 * n + 5) * (2 * n + 5), 16 * (n + 1) * (n + 1)) * ln / lp;
    const Rational c_sq = Rational((2 * n + 1) * (2 * n + 1), 16 * (n + 2) * (n + 2)) * lp / ln;
    if (a_sq != c_sq) return false;
  }
  return true;
}

std::vector<Rational> moments(OrthoFamily family, int k) {
  if (k < 0) return {};
  const JacobiData jac{family};
  // Walks on the path graph: an up-step into row i carries beta_i^2, a down-step 1.
  const std::size_t size = static_cast<std::size_t>(k / 2 + 2);
  std::vector<Rational> beta_sq(size);
  for (std::size_t i = 1; i < size; ++i) beta_sq[i] = jac.offdiag_sq(static_cast<int>(i));
  std::vector<Rational> v(size), next(size);
  v[0] = Rational(1);
  std::vector<Rational> out{Rational(1)};
  for (int step = 1; step <= k; ++step) {
    for (std::size_t i = 0; i < size; ++i) {
      Rational acc;
      if (i + 1 < size) acc += v[i + 1];
      if (i > 0) acc += beta_sq[i] * v[i - 1];
      next[i] = acc;
    }
    std::swap(v, next);
    out.push_back(v[0]);
  }
  return out;
}

std::vector<Rational> hankel(OrthoFamily family, int n) {
  if (n < 1) throw std::invalid_argument("hankel needs N >= 1");
  const std::vector<Rational> m = moments(family, 2 * n - 2);
  std::vector<Rational> out;
  for (int size = 1; size <= n; ++size) {
    RationalMatrix h(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i + j)];
    }
    out.push_back(determinant(std::move(h)));
  }
  return out;
}

Rational moment_functional(const RationalPoly& p, const std::vector<Rational>& m) {
  if (p.degree() >= static_cast<int>(m.size())) throw std::out_of_range("not enough moments for this degree");
  Rational acc;
  for (int i = 0; i <= p.degree(); ++i) acc += p.coeff(i) * m[static_cast<std::size_t>(i)];
  return acc;
}

GramReport gram_check(OrthoFamily family, int n) {
  if (n < 1) throw std::invalid_argument("gram_check needs N >= 1");
  GramReport r{family, n, {}, true, true};
  const auto p = ortho_members(family, n);
  const auto m = moments(family, 2 * n);
  r.gram.assign(static_cast<std::size_t>(n + 1), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const Rational v = moment_functional(p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)], m);
      r.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      r.gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
      if (i == j && v.sign() <= 0) r.positive = false;
      if (i != j && !v.is_zero()) r.orthogonal = false;
    }
  }
  return r;
}

NonclassicalWitness nonclassical_check(OrthoFamily family, int max_n, EigenRule rule) {
  if (max_n < 0) throw std::invalid_argument("nonclassical_check needs max_n >= 0");
  NonclassicalWitness w = nonclassical_system(ortho_members(family, max_n), rule);
  w.family = family;
  return w;
}

NonclassicalWitness nonclassical_system(const std::vector<RationalPoly>& members, EigenRule rule) {
  if (members.empty()) throw std::invalid_argument("nonclassical_system needs at least p_0");
  const int max_n = static_cast<int>(members.size()) - 1;
  NonclassicalWitness w{OrthoFamily::Q, rule, max_n, {"a", "b", "c", "e", "f", "g"}, {}, {}, 0, 0, {}, false, {}};
  const RationalPoly x = RationalPoly::variable();
  constexpr int kUnknowns = 6;

  for (int n = 0; n <= max_n; ++n) {
    const RationalPoly& p = members[static_cast<std::size_t>(n)];
    const RationalPoly d1 = p.derivative();
    const RationalPoly d2 = d1.derivative();
    const Rational nn(n);
    const Rational falling = nn * (nn - Rational(1));
    const bool printed = rule == EigenRule::AsPrinted;
    // Operator part minus eigenvalue part, one polynomial per unknown.
    const std::array<RationalPoly, kUnknowns> parts = {
        x * x * d2 - p * falling,
        x * d2 - p * (printed ? nn : Rational(0)),
        d2 - p * (printed ? Rational(1) : Rational(0)),
        x * d1 - p * nn,
        d1 - p * (printed ? Rational(1) : Rational(0)),
        p - p,
    };
    int top = -1;
    for (const auto& part : parts) top = std::max(top, part.degree());
    for (int k = 0; k <= top; ++k) {
      std::vector<Rational> row(kUnknowns);
      bool nonzero = false;
      for (int u = 0; u < kUnknowns; ++u) {
        row[static_cast<std::size_t>(u)] = parts[static_cast<std::size_t>(u)].coeff(k);
        nonzero = nonzero || !row[static_cast<std::size_t>(u)].is_zero();
      }
      if (nonzero) {
        w.equations.push_back(std::move(row));
        w.equation_n.push_back(n);
      }
    }
  }
  w.rank = rank(w.equations, kUnknowns);
  w.solution_basis = nullspace(w.equations, kUnknowns);
  w.solution_space_dim = static_cast<int>(w.solution_basis.size());
  w.constants_only = w.solution_space_dim == 1 && std::all_of(w.solution_basis[0].begin(), w.solution_basis[0].end() - 1,
                                                               [](const Rational& r) { return r.is_zero(); });

  struct Step {
    const char* label;
    int n;
    std::array<long, kUnknowns> v;
  };
  const Step steps[] = {{"c+f=0", 0, {0, 0, 1, 0, 1, 0}},
                        {"f=0", 1, {0, 0, 0, 0, 1, 0}},
                        {"b=0", 1, {0, 1, 0, 0, 0, 0}},
                        {"a+e=0", 2, {1, 0, 0, 1, 0, 0}},
                        {"2a+e=0", 3, {2, 0, 0, 1, 0, 0}}};
  for (const Step& s : steps) {
    ChainStep out{s.label, s.n, false};
    if (s.n <= max_n) {
      RationalMatrix rows;
      for (std::size_t r = 0; r < w.equations.size(); ++r) {
        if (w.equation_n[r] <= s.n) rows.push_back(w.equations[r]);
      }
      const int before = rank(rows, kUnknowns);
      std::vector<Rational> extra;
      for (long c : s.v) extra.emplace_back(c);
      rows.push_back(std::move(extra));
      out.implied = rank(std::move(rows), kUnknowns) == before;
    }
    w.chain.push_back(out);
  }
  return w;
}

std::vector<RationalPoly> assoc_ultraspherical(const Rational& nu, const Rational& assoc_c, int n) {
  std::vector<RationalPoly> out;
  if (n < 0) return out;
  out.push_back(RationalPoly::constant(Rational(1)));
  const RationalPoly x = RationalPoly::variable();
  RationalPoly prev;
  for (int k = 0; k < n; ++k) {
    const Rational kk(k);
    const Rational denom = kk + assoc_c + Rational(1);
    if (denom.is_zero()) {
      throw Error(ErrorCode::DivisionByZero, "associated ultraspherical step n=" + std::to_string(k) +
                                                 " divides by n+c+1 = 0");
    }
    RationalPoly next = x * out.back() * (Rational(2) * (kk + nu + assoc_c)) -
                        prev * (Rational(2) * nu + kk + assoc_c - Rational(1));
    prev = out.back();
    out.push_back(next * denom.reciprocal());
  }
  return out;
}

std::vector<RationalPoly> assoc_jacobi(const Rational& alpha, const Rational& beta, const Rational& assoc_c, int n) {
  std::vector<RationalPoly> out;
  if (n < 0) return out;
  out.push_back(RationalPoly::constant(Rational(1)));
  const Rational gamma = alpha + beta + Rational(1);
  const Rational one(1), two(2);
  RationalPoly prev;
  for (int k = 0; k < n; ++k) {
    const Rational s = two * Rational(k) + two * assoc_c + gamma;  // 2n + 2c + gamma
    const Rational nc = Rational(k) + assoc_c;
    const Rational lead = two * (nc + one) * (nc + gamma) * (s - one);
    if (lead.is_zero()) {
      throw Error(ErrorCode::DivisionByZero,
                  "associated Jacobi step n=" + std::to_string(k) + " has vanishing leading factor");
    }
    const RationalPoly mid{s * (gamma - one) * (gamma - two * beta - one), s * (s - one) * (s + one)};
    RationalPoly next = mid * out.back() - prev * (two * (nc + gamma - beta - one) * (nc + beta) * (s + one));
    prev = out.back();
    out.push_back(next * lead.reciprocal());
  }
  return out;
}

Quadrature golub_welsch(OrthoFamily family, int n, double residual_bound) {
  if (n < 1) throw std::invalid_argument("golub_welsch needs N >= 1");
  const JacobiData jac{family};
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) sub(i - 1) = jac.offdiag(i);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::Nonconvergence, "tridiagonal eigensolver did not converge for N=" + std::to_string(n));
  }
  Quadrature q;
  const Eigen::VectorXd& theta = solver.eigenvalues();
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  for (int k = 0; k < n; ++k) {
    double res2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double jv = diag(i) * vecs(i, k);
      if (i > 0) jv += sub(i - 1) * vecs(i - 1, k);
      if (i + 1 < n) jv += sub(i) * vecs(i + 1, k);
      const double r = jv - theta(k) * vecs(i, k);
      res2 += r * r;
    }
    const double res = std::sqrt(res2);
    q.max_residual = std::max(q.max_residual, res);
    if (!(res <= residual_bound)) {
      throw Error(ErrorCode::Nonconvergence, "eigenpair " + std::to_string(k) + " residual " + std::to_string(res) +
                                                 " exceeds bound");
    }
    q.nodes.push_back(theta(k));
    q.weights.push_back(vecs(0, k) * vecs(0, k));  // m_0 = 1
  }
  return q;
}

QuadOrthogonality quad_orthogonality(OrthoFamily family, int n_quad, int max_deg) {
  if (n_quad <= max_deg) throw std::invalid_argument("quad_orthogonality needs N_quad > max_deg");
  const Quadrature rule = golub_welsch(family, n_quad);
  const auto p = ortho_members(family, max_deg);
  std::vector<std::vector<double>> values(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (double x : rule.nodes) values[i].push_back(p[i].evaluate(x));
  }
  QuadOrthogonality out{0.0, INFINITY};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i; j < p.size(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * values[i][k] * values[j][k];
      if (i == j) {
        out.min_diag = std::min(out.min_diag, acc);
      } else {
        out.max_offdiag = std::max(out.max_offdiag, std::abs(acc));
      }
    }
  }
  return out;
}

std::complex<double> hyp2f1(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                            std::complex<double> z, double tol, long max_terms) {
  if (!(tol > 0.0)) throw std::invalid_argument("hyp2f1 tolerance must be positive");
  if (c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::round(c.real())) {
    throw Error(ErrorCode::NoConvergence, "hyp2f1 undefined for non-positive integer c");
  }
  const double r = std::abs(z);
  constexpr double kEdge = 1e-15;
  if (r > 1.0 + kEdge) throw Error(ErrorCode::NoConvergence, "hyp2f1 series diverges for |z| > 1");
  const bool on_circle = r >= 1.0 - kEdge;
  const double excess = (c - a - b).real();
  if (on_circle && !(excess > 0.0)) {
    throw Error(ErrorCode::NoConvergence, "hyp2f1 series diverges on |z| = 1 unless Re(c-a-b) > 0");
  }
  std::complex<double> sum = 0.0;
  std::complex<double> term = 1.0;
  for (long k = 0; k < max_terms; ++k) {
    sum += term;
    const double kk = static_cast<double>(k);
    const std::complex<double> next = term * (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    if (next == 0.0) return sum;
    const double mag = std::abs(next);
    double tail = INFINITY;
    if (on_circle) {
      tail = mag * (kk + 1.0) / excess;
    } else {
      const double ratio = mag / std::abs(term);
      const double rho = std::max(ratio, r);
      if (rho < 1.0) tail = mag / (1.0 - rho);
    }
    if (tail <= tol * std::max(1.0, std::abs(sum))) return sum + next;
    term = next;
  }
  throw Error(ErrorCode::NoConvergence, "hyp2f1 did not reach tolerance within the term limit");
}

}  // namespace djkm
