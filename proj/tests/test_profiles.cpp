#include <doctest.h>

#include <random>

#include "harbourne/errors.hpp"
#include "harbourne/profile.hpp"
#include "oracles.hpp"

using namespace harbourne;

namespace {

bool has_violation(const ValidationReport& r, const std::string& name) {
  for (const auto& v : r.violations) {
    if (v.invariant == name) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("profiles") {
  TEST_CASE("curve classes carry their Bezout number") {
    CHECK(CurveClass::line().pairwise_intersection() == 1);
    CHECK(CurveClass::conic().pairwise_intersection() == 4);
    CHECK(CurveClass::plane_curve(3).pairwise_intersection() == 9);
    CHECK(CurveClass::one_one().pairwise_intersection() == 2);
    CHECK(CurveClass::plane_curve(1) == CurveClass::line());
    CHECK(CurveClass::plane_curve(2) == CurveClass::conic());
    CHECK(CurveClass::plane_curve(6).name() == "plane-curve-p2(6)");
    CHECK_THROWS_AS(CurveClass::plane_curve(0), std::invalid_argument);
    CHECK_THROWS_AS(CurveClass::one_one().plane_degree(), std::logic_error);
  }

  TEST_CASE("Klein lines validate with both sides 210") {
    ConfigurationProfile p(CurveClass::line(), 21, {{3, 28}, {4, 21}});
    CHECK(validate(p).ok());
    const auto sides = incidence_sides(p);
    CHECK(sides.lhs == 210);
    CHECK(sides.rhs == 210);
  }

  TEST_CASE("conic pencil validates") {
    ConfigurationProfile p(CurveClass::conic(), 5, {{5, 4}});
    CHECK(validate(p).ok());
    CHECK(incidence_sides(p).lhs == 40);
  }

  TEST_CASE("off-by-one conic profile reports both sides") {
    ConfigurationProfile p(CurveClass::conic(), 3, {{2, 11}});
    const auto r = validate(p);
    REQUIRE_FALSE(r.ok());
    CHECK(has_violation(r, "incidence-identity"));
    CHECK(r.summary().find("11") != std::string::npos);
    CHECK(r.summary().find("12") != std::string::npos);
  }

  TEST_CASE("range, sign and common-point violations") {
    CHECK(has_violation(validate(ConfigurationProfile(CurveClass::line(), 3, {{4, 1}})), "multiplicity-range"));
    CHECK(has_violation(validate(ConfigurationProfile(CurveClass::line(), 3, {{2, 6}, {3, -1}})), "non-negative-counts"));
    CHECK(has_violation(validate(ConfigurationProfile(CurveClass::line(), 2, {})), "nonempty"));
    CHECK(has_violation(validate(ConfigurationProfile(CurveClass::line(), 1, {})), "k-range"));
    // 5 points on every conic would break Bezout even though the identity holds.
    ConfigurationProfile five(CurveClass::conic(), 2, {{2, 5}});
    CHECK(has_violation(validate(five), "incidence-identity"));
    ConfigurationProfile lines(CurveClass::line(), 2, {{2, 1}});
    CHECK(validate(lines).ok());
  }

  TEST_CASE("construction rejects malformed histograms") {
    CHECK_THROWS_AS(ConfigurationProfile(CurveClass::line(), 3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(ConfigurationProfile(CurveClass::line(), -1, {}), std::invalid_argument);
    CHECK_THROWS_AS(ConfigurationProfile(CurveClass::line(), 3, {{2, 2'000'000}}), std::invalid_argument);
    ConfigurationProfile p(CurveClass::line(), 3, {{2, 3}, {3, 0}});
    CHECK(p.t().size() == 1);
  }

  TEST_CASE("moments against direct summation") {
    ConfigurationProfile klein(CurveClass::line(), 21, {{3, 28}, {4, 21}});
    const auto m = moments(klein);
    CHECK(m.f0 == 49);
    CHECK(m.f1 == 168);
    CHECK(m.f2 == 588);

    ConfigurationProfile c(CurveClass::conic(), 3, {{2, 12}});
    CHECK(moments(c) == MomentSet{12, 24, 48});

    CHECK_THROWS_AS(moments(ConfigurationProfile(CurveClass::line(), 2, {})), InvalidProfile);

    const auto g = moments_excluding(ConfigurationProfile(CurveClass::conic(), 4, {{4, 2}, {3, 4}}), 4);
    CHECK(g.f0 == 4);
    CHECK(g.f1 == 12);
  }

  TEST_CASE("f2 - f1 = I k (k-1) on random valid profiles") {
    std::mt19937_64 rng(11);
    for (const auto& cls : {CurveClass::line(), CurveClass::conic(), CurveClass::plane_curve(3), CurveClass::one_one()}) {
      for (int i = 0; i < 200; ++i) {
        const auto p = oracle::random_profile(rng, cls, 2, 25);
        REQUIRE(validate(p).ok());
        const auto m = moments(p);
        const auto o = oracle::moments(p.t());
        CHECK(m.f0 == o.f0);
        CHECK(m.f1 == o.f1);
        CHECK(m.f2 == o.f2);
        CHECK(m.f2 - m.f1 == cls.pairwise_intersection() * p.k() * (p.k() - 1));
        CHECK(m.f0 <= m.f1);
        CHECK(m.f1 <= m.f2);
      }
    }
  }

  TEST_CASE("pencil deviations are caught by the identity") {
    for (int k = 4; k <= 8; ++k) {
      CHECK(validate(ConfigurationProfile(CurveClass::conic(), k, {{k, 4}})).ok());
      CHECK_FALSE(validate(ConfigurationProfile(CurveClass::conic(), k, {{k, 4}, {2, 1}})).ok());
      CHECK_FALSE(validate(ConfigurationProfile(CurveClass::conic(), k, {{k, 3}, {3, 1}})).ok());
    }
  }

  TEST_CASE("validate is deterministic") {
    ConfigurationProfile p(CurveClass::conic(), 4, {{3, 7}});
    CHECK(validate(p).summary() == validate(p).summary());
  }
}
