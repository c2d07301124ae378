#include <doctest.h>

#include <random>

#include "harbourne/cremona.hpp"
#include "harbourne/errors.hpp"
#include "harbourne/harbourne_constant.hpp"
#include "oracles.hpp"

using namespace harbourne;

TEST_SUITE("cremona") {
  TEST_CASE("Klein and Wiman lines to conics") {
    const ConfigurationProfile klein(CurveClass::line(), 21, {{3, 28}, {4, 21}});
    const auto ck = cremona_profile(klein, CremonaMode::GenericPoints);
    CHECK(ck == ConfigurationProfile(CurveClass::conic(), 21, {{3, 28}, {4, 21}, {21, 3}}));
    CHECK(local_h(ck).h == Rational(-147, 52));
    CHECK(to_decimal(local_h(ck).h, 3) == "-2.827");

    const ConfigurationProfile wiman(CurveClass::line(), 45, {{3, 120}, {4, 45}, {5, 36}});
    const auto cw = cremona_profile(wiman, CremonaMode::GenericPoints);
    CHECK(cw == ConfigurationProfile(CurveClass::conic(), 45, {{3, 120}, {4, 45}, {5, 36}, {45, 3}}));
  }

  TEST_CASE("common points: conics to lines") {
    const ConfigurationProfile p(CurveClass::conic(), 4, {{4, 3}, {2, 6}});
    const auto lines = cremona_profile(p, CremonaMode::CommonPoints);
    CHECK(lines == ConfigurationProfile(CurveClass::line(), 4, {{2, 6}}));
    const auto before = moments(p), after = moments(lines);
    CHECK(after.f0 == before.f0 - 3);
    CHECK(after.f1 == before.f1 - 3 * 4);
    // (4k - f1)/f0 = (k - F1)/(F0 + 3).
    Rational via_lines(4 - after.f1, after.f0 + 3);
    via_lines.canonicalize();
    CHECK(local_h(p).h == via_lines);
  }

  TEST_CASE("mode preconditions") {
    CHECK_THROWS_AS(cremona_profile(ConfigurationProfile(CurveClass::conic(), 5, {{5, 4}}), CremonaMode::CommonPoints),
                    HypothesisError);
    CHECK_THROWS_AS(cremona_profile(ConfigurationProfile(CurveClass::line(), 3, {{2, 3}}), CremonaMode::CommonPoints),
                    HypothesisError);
    CHECK_THROWS_AS(cremona_profile(ConfigurationProfile(CurveClass::conic(), 3, {{2, 12}}), CremonaMode::GenericPoints),
                    HypothesisError);
    CHECK_THROWS_AS(cremona_profile(ConfigurationProfile(CurveClass::line(), 3, {{2, 2}}), CremonaMode::GenericPoints),
                    InvalidProfile);
  }

  TEST_CASE("transformation law") {
    CHECK(h_transformation_law(Rational(-3), 49) == Rational(-147, 52));
    CHECK(h_transformation_law(Rational(-225, 67), 201) == Rational(-225, 68));
    CHECK(h_transformation_law(Rational(0), 17) == 0);
    CHECK(to_decimal(h_transformation_law(Rational(-225, 67), 201), 2) == "-3.31");
  }

  TEST_CASE("iterated transformation law") {
    const auto one = iterate_remark(Rational(-4), 1000, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[1].h == Rational(-4000, 1003));
    CHECK(one[1].s == 1003);
    CHECK(one[1].degree_multiplier == 2);
    const auto zero = iterate_remark(Rational(-7, 3), 10, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].h == Rational(-7, 3));
    CHECK(zero[0].s == 10);
    const auto two = iterate_remark(Rational(-3), 49, 2);
    CHECK(two[2].h == Rational(-147, 55));
    CHECK(two[2].degree_multiplier == 4);
    CHECK_THROWS_AS(iterate_remark(Rational(1), 5, -1), std::invalid_argument);
  }

  TEST_CASE("numerator invariance and the law on random line profiles") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
      const auto p = oracle::random_profile(rng, CurveClass::line(), 3, 40);
      const auto before = local_h(p);
      const auto after = local_h(cremona_profile(p, CremonaMode::GenericPoints));
      CHECK(after.numerator == before.numerator);
      CHECK(after.s == before.s + 3);
      CHECK(after.h == h_transformation_law(before.h, before.s));
    }
  }
}
