#include "catch_amalgamated.hpp"

#include "djkm/cocycle.hpp"
#include "djkm/error.hpp"
#include "test_support.hpp"

using namespace djkm;
using djkm::testing::c_poly;
using djkm::testing::poly;
using djkm::testing::q;

namespace {

OmegaVector vec(std::initializer_list<std::pair<int, RationalPoly>> parts) {
  OmegaVector v;
  for (const auto& [k, p] : parts) v.w(k) = p;
  return v;
}

}  // namespace

TEST_CASE("omega vectors", "[cocycle]") {
  CHECK(OmegaVector().is_zero());
  const OmegaVector a = OmegaVector::omega(-3) + OmegaVector::omega(-1) * c_poly();
  CHECK(!a.is_zero());
  CHECK((a - a).is_zero());
  CHECK(a.w(-1) == c_poly());
  CHECK((a * poly({q(2)})).w(-3) == poly({q(2)}));
  CHECK_THROWS_AS(OmegaVector::omega(-5), std::out_of_range);
  CHECK(a.to_string() == "(c)*w-1 + (1)*w-3");
}

TEST_CASE("reduction of u-monomials", "[cocycle]") {
  for (int k = -4; k <= -1; ++k) CHECK(reduce_u_monomial(k) == OmegaVector::omega(k));
  CHECK(reduce_u_monomial(0) == OmegaVector::omega(-4));
  CHECK(reduce_u_monomial(1) == vec({{-3, poly({q(1, 2)})}, {-1, c_poly() * q(1, 2)}}));
  // Upward direction, checked by hand from the relation at m = -1, -2, -3.
  CHECK(reduce_u_monomial(-5) == vec({{-3, c_poly() * q(1, 2)}, {-1, poly({q(1, 2)})}}));
  CHECK(reduce_u_monomial(-6) == vec({{-4, c_poly() * q(4, 5)}, {-2, poly({q(1, 5)})}}));
  CHECK(reduce_u_monomial(-7) == reduce_u_monomial(-5) * c_poly());

  const ReductionTable table(40);
  CHECK(!table.first_relation_violation().has_value());
  // Reductions reproduce the four families on the nonnegative side.
  const PolynomialFamily p4(FamilyId::P4, 40), p3(FamilyId::P3, 40), p2(FamilyId::P2, 40), p1(FamilyId::P1, 40);
  for (int k = -4; k <= 40; ++k) {
    REQUIRE(table.at(k).w(-4) == p4.original(k));
    REQUIRE(table.at(k).w(-3) == p3.original(k));
    REQUIRE(table.at(k).w(-2) == p2.original(k));
    REQUIRE(table.at(k).w(-1) == p1.original(k));
    REQUIRE(table.at(k).w0().is_zero());
  }
}

TEST_CASE("plain differentials", "[cocycle]") {
  CHECK(reduce_plain(3).is_zero());
  CHECK(reduce_plain(-2).is_zero());
  CHECK(reduce_plain(-1) == OmegaVector::omega(0));
}

TEST_CASE("cocycle on monomials", "[cocycle]") {
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) {
      const OmegaVector v = cocycle({i, false}, {j, false});
      if (i + j == 0) {
        REQUIRE(v == OmegaVector::omega(0) * poly({q(j)}));
      } else {
        REQUIRE(v.is_zero());
      }
    }
  }
  CHECK(cocycle({2, true}, {-2, true}) == OmegaVector::omega(0) * poly({q(-2)}));
  CHECK(cocycle({1, true}, {1, false}) == vec({{-3, poly({q(1, 2)})}, {-1, c_poly() * q(1, 2)}}));
  CHECK(cocycle({-1, true}, {1, false}) == OmegaVector::omega(-1));
  CHECK(cocycle({3, false}, {0, true}) == reduce_u_monomial(2) * poly({q(-3)}));
  try {
    (void)cocycle({3, false}, {0, true}, false);
    FAIL("expected UNSUPPORTED_PAIR");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedPair);
  }
}

TEST_CASE("psi table values", "[cocycle]") {
  CHECK(psi(1, 0) == OmegaVector::omega(-1));
  CHECK(psi(0, 0) == OmegaVector::omega(-2));
  CHECK(psi(-1, 0) == OmegaVector::omega(-3));
  CHECK(psi(-2, 0) == OmegaVector::omega(-4));
  CHECK(psi(2, 1) == vec({{-3, poly({q(1, 2)})}, {-1, c_poly() * q(1, 2)}}));
  CHECK(psi(1, 1) == OmegaVector::omega(-4));
  CHECK(psi(3, 1) == vec({{-4, c_poly() * q(4, 5)}, {-2, poly({q(1, 5)})}}));
  CHECK(psi(-2, -1) == vec({{-3, c_poly() * q(1, 2)}, {-1, poly({q(1, 2)})}}));
  for (int s = -9; s <= 9; ++s) CHECK(psi(s - 4, 4) == psi(4, s - 4));
}

TEST_CASE("closed-form psi table against the reduction engine", "[cocycle]") {
  const CocycleReport r = verify_psi_table(12, 2);
  CHECK(r.relation_consistent);
  CHECK(r.psi_failures.empty());
  CHECK(r.uu_failures.empty());
  CHECK(r.antisymmetry_failures.empty());
  CHECK(r.passed());
  CHECK(r.psi_checked == 25 * 24);
  CHECK(r.uu_checked == 25 * 25);
  CHECK(r.antisymmetry_checked == 25 * 25 * 4);
  CHECK(verify_psi_table(3).passed());
  CHECK_THROWS_AS(verify_psi_table(0), std::invalid_argument);
}

TEST_CASE("literal negative family index would be out of range", "[cocycle]") {
  // i + j - 2 = -5 has no family member; the reduction matches |i + j| - 2 = 1 instead.
  const PolynomialFamily p3(FamilyId::P3, 3);
  CHECK_THROWS_AS(p3.original(-5), std::out_of_range);
  CHECK(cocycle({-5, true}, {1, false}) == vec({{-3, c_poly() * p3.original(1)}, {-1, p3.original(1)}}));
}
