#include "catch_amalgamated.hpp"

#include "djkm/diffops.hpp"
#include "test_support.hpp"

using namespace djkm;
using djkm::testing::c_poly;
using djkm::testing::Generator;
using djkm::testing::poly;
using djkm::testing::q;

TEST_CASE("operator application", "[diffops]") {
  const LinearDiffOp d({RationalPoly(), poly({q(1)})});
  CHECK(d.apply(poly({q(0), q(0), q(1)})) == c_poly() * q(2));
  const LinearDiffOp id({poly({q(1)})});
  Generator gen(3);
  for (int i = 0; i < 20; ++i) {
    const RationalPoly p = gen.poly(6);
    REQUIRE(id.apply(p) == p);
    REQUIRE(d.apply(p) == p.derivative());
  }
  CHECK(build_elliptic1_op(10).apply(RationalPoly()).is_zero());
  CHECK(build_gegenbauer_op(q(3, 2), 1).apply(c_poly() * q(3)).is_zero());
  CHECK(LinearDiffOp().order() == -1);
}

TEST_CASE("operator algebra is coefficientwise", "[diffops][property]") {
  Generator gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearDiffOp a({gen.poly(3), gen.poly(3), gen.poly(3)});
    const LinearDiffOp b({gen.poly(3), gen.poly(3), gen.poly(3), gen.poly(3)});
    const Rational s = gen.rational();
    const RationalPoly p = gen.poly(7);
    REQUIRE((a + b).apply(p) == a.apply(p) + b.apply(p));
    REQUIRE((a * s).apply(p) == a.apply(p) * s);
  }
}

TEST_CASE("Gegenbauer operators", "[diffops]") {
  const LinearDiffOp g = build_gegenbauer_op(q(3, 2), 5);
  CHECK(g.coeff(2) == poly({q(1), q(0), q(-1)}));
  CHECK(g.coeff(1) == c_poly() * q(-4));
  CHECK(g.coeff(0) == poly({q(40)}));
  CHECK(build_gegenbauer_op(q(-1, 2), 4).coeff(1).is_zero());
  for (int n = 0; n <= 100; ++n) {
    REQUIRE(build_gegenbauer_op(q(3, 2), n).apply(gegenbauer(q(3, 2), n)).is_zero());
    REQUIRE(build_gegenbauer_op(q(-1, 2), n).apply(gegenbauer(q(-1, 2), n)).is_zero());
  }
  CHECK(!build_gegenbauer_op(q(3, 2), 4).apply(gegenbauer(q(3, 2), 3)).is_zero());
}

TEST_CASE("second-order operators for P-3 and P-1", "[diffops]") {
  CHECK(build_case3_op(2).apply(c_poly() * q(1, 2)).is_zero());
  // c is a multiple of P_{-1,1} = c/2, so the negative control needs a different shape.
  CHECK(build_case3_op(2).apply(c_poly()).is_zero());
  CHECK(build_case3_op(2).apply(poly({q(0), q(0), q(1)})) == poly({q(0), q(0), q(0), q(0), q(4)}));
  CHECK(build_case4_op(2).apply(poly({q(1, 2)})).is_zero());
  CHECK(eigencheck(build_case3_op(5), FamilyId::P1, IndexView::Original, 7).is_zero());

  const PolynomialFamily p3(FamilyId::P3, 2 * 100 - 3);
  const PolynomialFamily p1(FamilyId::P1, 2 * 100 - 3);
  for (int n = 2; n <= 100; ++n) {
    const RationalPoly& a = p3.original(2 * n - 3);
    const RationalPoly& b = p1.original(2 * n - 3);
    REQUIRE(build_case4_op(n).apply(a).is_zero());
    REQUIRE(build_case3_op(n).apply(b).is_zero());
    REQUIRE(build_case3_op(n).apply(c_poly() * a).is_zero());
    // Wrong eigen-index is a negative control.
    REQUIRE(!build_case4_op(n + 1).apply(a).is_zero());
  }
}

TEST_CASE("fourth-order elliptic operators", "[diffops]") {
  CHECK(build_elliptic1_op(8).apply(poly({q(-5, 35), q(0), q(32, 35)})).is_zero());
  CHECK(build_elliptic1_op(0).apply(poly({q(1)})).is_zero());
  CHECK(eigencheck(build_elliptic1_op(6), FamilyId::P4, IndexView::Shifted, 6).is_zero());
  CHECK(build_elliptic2_op(2).apply(poly({q(1)})).is_zero());
  CHECK(build_elliptic2_op(8).apply(c_poly() * q(8, 35)).is_zero());
  CHECK(!build_elliptic1_op(10).apply(poly({q(-5, 35), q(0), q(32, 35)})).is_zero());
  CHECK(!build_elliptic2_op(8).apply(poly({q(-5, 35), q(0), q(32, 35)})).is_zero());
  CHECK(build_elliptic1_op(12).has_degree_profile());
  CHECK(build_qform_op(3).has_degree_profile());

  const OdeSweep s1 = verify_ode(OdeTarget::P4, 120, 2);
  const OdeSweep s2 = verify_ode(OdeTarget::P2, 120, 2);
  CHECK(s1.all_passed());
  CHECK(s2.all_passed());
  REQUIRE(s1.checks.size() == 121);
  // Odd indices are reported like any other; their members are zero.
  for (int n : {7, 9, 11}) {
    CHECK(s1.checks[static_cast<std::size_t>(n)].member_zero);
    CHECK(s1.checks[static_cast<std::size_t>(n)].passed());
  }
  CHECK(!s1.checks[12].member_zero);
}

TEST_CASE("q-form operator", "[diffops]") {
  const RationalPoly q2 = poly({q(-5, 35), q(0), q(32, 35)});
  CHECK(build_qform_op(2).apply(q2).is_zero());
  CHECK(build_qform_op(0).apply(poly({q(1)})).is_zero());
  // Substituting n -> 2n + 4 in the elliptic operator gives 16 times the q-form.
  for (int n = 0; n <= 30; ++n) CHECK(build_elliptic1_op(2 * n + 4) == build_qform_op(n) * q(16));
  const OdeSweep sweep = verify_ode(OdeTarget::Q, 100, 2);
  CHECK(sweep.all_passed());
  CHECK(sweep.checks.size() == 101);
  CHECK(verify_ode(OdeTarget::QBar, 60, 2).all_passed());
}

TEST_CASE("associated Jacobi operator as published", "[diffops]") {
  const LinearDiffOp w = build_wimp_op(2, q(-1), q(-1), q(3, 2));
  CHECK(w.coeff(4) == poly({q(1), q(0), q(-2), q(0), q(1)}));
  CHECK(w.coeff(3) == poly({q(0), q(-10), q(0), q(10)}));
  CHECK(w.coeff(2) == poly({q(19), q(-52), q(7)}));
  CHECK(w.coeff(1) == c_poly() * q(-39));
  CHECK(w.coeff(0) == poly({q(64)}));
  const RationalPoly q2 = poly({q(-5, 35), q(0), q(32, 35)});
  const RationalPoly residual = w.apply(q2);
  CHECK(residual == poly({q(64 * 14, 35), q(-64 * 52, 35)}));
  CHECK(eigencheck(w, FamilyId::P4, IndexView::Q, 2) == residual);
  CHECK(build_qform_op(2).apply(q2).is_zero());
  // Only the D^2 coefficient differs from the q-form operator at n = 2.
  const LinearDiffOp qf = build_qform_op(2);
  for (int i : {0, 1, 3, 4}) CHECK(w.coeff(i) == qf.coeff(i));
  CHECK(w.coeff(2) != qf.coeff(2));
}

TEST_CASE("sweep targets", "[diffops]") {
  CHECK(parse_ode_target("qbar") == OdeTarget::QBar);
  CHECK(parse_ode_target("P-1") == OdeTarget::P1);
  CHECK(!parse_ode_target("x").has_value());
  const OdeSweep s = verify_ode(OdeTarget::P3, 40, 3);
  CHECK(s.all_passed());
  CHECK(s.checks.front().n == 2);
  CHECK(s.checks.front().original_index == 1);
  CHECK(verify_ode(OdeTarget::P1, 40).all_passed());
  CHECK(verify_ode(OdeTarget::P1, 1).checks.empty());
}
