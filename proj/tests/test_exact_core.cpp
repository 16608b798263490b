#include "catch_amalgamated.hpp"

#include "djkm/error.hpp"
#include "djkm/json_io.hpp"
#include "djkm/laurent_series.hpp"
#include "test_support.hpp"

using namespace djkm;
using djkm::testing::c_poly;
using djkm::testing::Generator;
using djkm::testing::poly;
using djkm::testing::q;

namespace {

// 1 - 2c z^2 + z^4, known exactly through z^trunc.
LaurentSeries quartic(int trunc) {
  return LaurentSeries(0, {poly({q(1)}), {}, -c_poly() * q(2), {}, poly({q(1)})}, trunc);
}

// Binomial-series oracle: (1 + a)^alpha = sum_k binom(alpha, k) a^k for a = s - 1.
LaurentSeries binomial_power(const LaurentSeries& s, const Rational& alpha) {
  const int trunc = s.truncation_order();
  const LaurentSeries one = LaurentSeries::monomial(poly({q(1)}), 0, trunc);
  const LaurentSeries a = s - one;
  LaurentSeries sum = one;
  LaurentSeries a_pow = one;
  Rational binom(1);
  for (int k = 1; k <= trunc; ++k) {
    binom *= (alpha - Rational(k - 1)) * Rational(1, k);
    a_pow = a_pow * a;
    sum += a_pow * RationalPoly::constant(binom);
  }
  return sum;
}

void require_canonical(const Rational& r) {
  REQUIRE(r.denominator() > 0);
  mpz_class g;
  mpz_class n = abs(r.numerator());
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), r.denominator().get_mpz_t());
  REQUIRE((r.is_zero() ? r.denominator() == 1 : g == 1));
}

}  // namespace

TEST_CASE("rational values stay in lowest terms with positive denominator", "[rational]") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator_str() == "2");
  CHECK(Rational(0, -5).denominator_str() == "1");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);

  Generator gen(7);
  Rational acc(1);
  for (int i = 0; i < 200; ++i) {
    const Rational r = gen.rational();
    switch (i % 4) {
      case 0: acc += r; break;
      case 1: acc -= r; break;
      case 2: acc *= r; break;
      default:
        if (!r.is_zero()) acc /= r;
    }
    require_canonical(acc);
  }
}

TEST_CASE("polynomial arithmetic examples", "[poly]") {
  const RationalPoly p = poly({q(-5, 35), q(0), q(32, 35)});  // (32c^2 - 5)/35
  CHECK(p.derivative() == poly({q(0), q(64, 35)}));
  CHECK(p.evaluate(Rational(1)) == q(27, 35));
  CHECK(p.evaluate(1.0) == Catch::Approx(27.0 / 35.0));

  const RationalPoly c2m1 = poly({q(-1), q(0), q(1)});
  const RationalPoly cm1 = poly({q(-1), q(1)});
  CHECK(c2m1.exact_divide(cm1) == poly({q(1), q(1)}));

  try {
    (void)c2m1.exact_divide(poly({q(-2), q(1)}));
    FAIL("expected NON_DIVISIBLE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonDivisible);
  }
  try {
    (void)c2m1.exact_divide(RationalPoly());
    FAIL("expected DIV_ZERO");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivZero);
  }
  CHECK(RationalPoly().degree() == -1);
  CHECK(poly({q(0), q(0)}).is_zero());
  CHECK(p.to_string() == "32/35*c^2 - 1/7");
}

TEST_CASE("polynomial ring axioms on random triples", "[poly][property]") {
  Generator gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).is_zero());
    REQUIRE((a * b).derivative() == a.derivative() * b + a * b.derivative());
    if (!b.is_zero()) {
      REQUIRE((a * b).exact_divide(b) == a);
      auto [quot, rem] = a.divmod(b);
      REQUIRE(quot * b + rem == a);
      REQUIRE(rem.degree() < b.degree());
    }
    const Rational x = gen.rational();
    REQUIRE((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    const RationalPoly combined = a * b + c;
    for (const auto& coeff : combined.coeffs()) require_canonical(coeff);
  }
}

TEST_CASE("series square root", "[series]") {
  const LaurentSeries root = series_sqrt(quartic(6));
  // 1 - c z^2 + (1 - c^2)/2 z^4 from (1+a)^(1/2) = 1 + a/2 - a^2/8.
  CHECK(root.coeff(0) == poly({q(1)}));
  CHECK(root.coeff(2) == -c_poly());
  CHECK(root.coeff(4) == poly({q(1, 2), q(0), q(-1, 2)}));
  CHECK(root.truncation_order() == 6);
  CHECK(first_difference(root, binomial_power(quartic(6), q(1, 2)), 6) == kNoDifference);

  const LaurentSeries one = LaurentSeries::monomial(poly({q(1)}), 0, 10);
  CHECK(series_sqrt(one) == one);

  try {
    (void)series_sqrt(LaurentSeries::monomial(poly({q(2)}), 0, 4));
    FAIL("expected NOT_SQUARE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSquare);
  }
  CHECK_THROWS_AS(series_sqrt(LaurentSeries::monomial(poly({q(1)}), 1, 4)), Error);

  // Even leading order shifts by half.
  const LaurentSeries shifted = series_sqrt(quartic(8).shifted(-4));
  CHECK(shifted.lowest_order() == -2);
  CHECK(first_difference(shifted * shifted, quartic(8).shifted(-4), 4) == kNoDifference);
}

TEST_CASE("series -3/2 power", "[series]") {
  const LaurentSeries r = series_pow_neg_3_2(quartic(8));
  CHECK(r.coeff(0) == poly({q(1)}));
  CHECK(r.coeff(2) == c_poly() * q(3));
  // -(3/2) z^4 + (15/8)(4 c^2 z^4)
  CHECK(r.coeff(4) == poly({q(-3, 2), q(0), q(15, 2)}));
  CHECK(first_difference(r, binomial_power(quartic(8), q(-3, 2)), 8) == kNoDifference);

  const LaurentSeries one = LaurentSeries::monomial(poly({q(1)}), 0, 5);
  CHECK(series_pow_neg_3_2(one) == one);
  CHECK_THROWS_AS(series_pow_neg_3_2(quartic(6).shifted(2)), Error);
}

TEST_CASE("roots and powers invert on random unit series", "[series][property]") {
  Generator gen(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int trunc = gen.integer(3, 10);
    const LaurentSeries s = gen.unit_series(trunc);
    const LaurentSeries root = series_sqrt(s);
    REQUIRE(first_difference(root * root, s, trunc) == kNoDifference);
    const LaurentSeries inv32 = series_pow_neg_3_2(s);
    const LaurentSeries unit = inv32 * s * root;
    REQUIRE(first_difference(unit, LaurentSeries::monomial(poly({q(1)}), 0, trunc), trunc) == kNoDifference);
    REQUIRE(first_difference(inv32, binomial_power(s, q(-3, 2)), trunc) == kNoDifference);

    const LaurentSeries r = gen.even_unit_series(trunc);
    REQUIRE(first_difference(series_sqrt(r * r), r, trunc) == kNoDifference);
  }
}

TEST_CASE("termwise integration", "[series]") {
  const LaurentSeries z2 = LaurentSeries::monomial(poly({q(1)}), 2, 6);
  const LaurentSeries i2 = series_integrate(z2);
  CHECK(i2.lowest_order() == 3);
  CHECK(i2.coeff(3) == poly({q(1, 3)}));
  CHECK(i2.truncation_order() == 7);

  const LaurentSeries inv_sq = LaurentSeries::monomial(poly({q(-1)}), -2, 6);
  const LaurentSeries i_inv = series_integrate(inv_sq);
  CHECK(i_inv.lowest_order() == -1);
  CHECK(i_inv.coeff(-1) == poly({q(1)}));

  try {
    (void)series_integrate(LaurentSeries::monomial(poly({q(1)}), -1, 6));
    FAIL("expected RESIDUE_NONZERO");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResidueNonzero);
  }

  Generator gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentSeries s = gen.unit_series(gen.integer(2, 9)).shifted(gen.integer(-4, 2));
    if (s.lowest_order() <= -1 && s.truncation_order() >= -1 && !s.coeff(-1).is_zero()) continue;
    const LaurentSeries back = series_integrate(s).derivative();
    REQUIRE(first_difference(back, s, s.truncation_order()) == kNoDifference);
    REQUIRE(back.truncation_order() == s.truncation_order());
  }
}

TEST_CASE("truncation never overstates knowledge", "[series]") {
  const LaurentSeries a(0, {poly({q(1)}), poly({q(2)})}, 3);   // 1 + 2z + O(z^4)
  const LaurentSeries b(-1, {poly({q(1)})}, 5);                 // z^-1 + O(z^6)
  const LaurentSeries prod = a * b;
  CHECK(prod.lowest_order() == -1);
  CHECK(prod.truncation_order() == 2);  // min(3 + (-1), 5 + 0)
  CHECK((a + b).truncation_order() == 3);
  CHECK(a.derivative().truncation_order() == 2);
  CHECK_THROWS_AS(a.coeff(4), std::out_of_range);
  CHECK(a.coeff(3).is_zero());
  CHECK(a.coeff(-7).is_zero());
}

TEST_CASE("json wire format", "[json]") {
  const RationalPoly p = poly({q(-5, 35), q(0), q(32, 35)});
  const nlohmann::json j = p;
  CHECK(j.dump() == R"({"coeffs":[["-1","7"],["0","1"],["32","35"]]})");
  CHECK(j.get<RationalPoly>() == p);

  const nlohmann::json big = nlohmann::json::parse(R"({"coeffs":[["123456789012345678901234567890","-4"]]})");
  const RationalPoly bp = big.get<RationalPoly>();
  CHECK(bp.coeff(0).denominator_str() == "2");
  CHECK(bp.coeff(0).numerator_str() == "-61728394506172839450617283945");
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"coeffs":[["1","0"]]})").get<RationalPoly>(), Error);

  Generator gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentSeries s = gen.unit_series(gen.integer(1, 8)).shifted(gen.integer(-3, 3));
    const nlohmann::json sj = s;
    REQUIRE(laurent_series_from_json(nlohmann::json::parse(sj.dump())) == s);
  }
}
