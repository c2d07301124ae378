#include <doctest.h>

#include <random>

#include "harbourne/configuration.hpp"
#include "harbourne/cremona.hpp"
#include "harbourne/errors.hpp"
#include "harbourne/harbourne_constant.hpp"
#include "oracles.hpp"

using namespace harbourne;

namespace {

const FieldPtr Q = NumberField::rationals();

ProjPoint pt(long x, long y, long z) { return ProjPoint::rational(Q, Rational(x), Rational(y), Rational(z)); }

PlaneCurve line(long a, long b, long c) { return PlaneCurve::line(Q, Rational(a), Rational(b), Rational(c)); }

PlaneCurve conic(long a, long b, long c, long d, long e, long f) {
  return PlaneCurve::conic(Q, Rational(a), Rational(b), Rational(c), Rational(d), Rational(e), Rational(f));
}

GeometryErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("no GeometryError");
  return GeometryErrorKind::InvalidCurve;
}

// Members a F + b G of the pencil through (+-1 : +-1 : 1).
PlaneCurve pencil_member(long a, long b) { return conic(a + 2 * b, a - b, -2 * a - b, 0, 0, 0); }

std::vector<std::array<Rational, 3>> random_lines(std::mt19937_64& rng, int k, int range) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<std::array<Rational, 3>> out;
  std::vector<PlaneCurve> seen;
  while (static_cast<int>(out.size()) < k) {
    std::array<Rational, 3> l{Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng))};
    if (l[0] == 0 && l[1] == 0 && l[2] == 0) continue;
    PlaneCurve c = PlaneCurve::line(Q, l[0], l[1], l[2]);
    bool fresh = true;
    for (const auto& s : seen) fresh = fresh && !(s == c);
    if (!fresh) continue;
    seen.push_back(c);
    out.push_back(l);
  }
  return out;
}

GeometricConfiguration as_config(const std::vector<std::array<Rational, 3>>& lines) {
  std::vector<PlaneCurve> curves;
  for (const auto& l : lines) curves.push_back(PlaneCurve::line(Q, l[0], l[1], l[2]));
  return GeometricConfiguration(Q, std::move(curves));
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("projective points are canonical") {
    CHECK(pt(2, 4, 6) == pt(1, 2, 3));
    CHECK(pt(0, -3, 6) == pt(0, 1, -2));
    CHECK_FALSE(pt(1, 2, 3) == pt(1, 2, 4));
    CHECK(kind_of([] { pt(0, 0, 0); }) == GeometryErrorKind::InvalidPoint);
  }

  TEST_CASE("incidence") {
    CHECK(incident(line(1, 1, 1), pt(1, -1, 0)));
    CHECK(incident(conic(1, 1, -2, 0, 0, 0), pt(1, 1, 1)));
    CHECK(incident(line(1, 0, 0), pt(0, 1, 1)));
    CHECK_FALSE(incident(line(1, 0, 0), pt(1, 0, 0)));
  }

  TEST_CASE("curve validity") {
    CHECK(kind_of([] { line(0, 0, 0); }) == GeometryErrorKind::InvalidCurve);
    CHECK(kind_of([] { conic(0, 0, 0, 0, 1, 1); }) == GeometryErrorKind::ReducibleCurve);
    CHECK(kind_of([] { conic(1, -1, 0, 0, 0, 0); }) == GeometryErrorKind::ReducibleCurve);
    CHECK(line(2, 4, 6) == line(1, 2, 3));
  }

  TEST_CASE("intersections") {
    const auto ll = intersect(line(1, 0, 0), line(0, 1, 0));
    REQUIRE(ll.size() == 1);
    CHECK(ll[0].point == pt(0, 0, 1));
    CHECK(ll[0].multiplicity == 1);

    const auto F = conic(1, 1, -2, 0, 0, 0), G = conic(2, -1, -1, 0, 0, 0);
    const auto cc = intersect(F, G);
    REQUIRE(cc.size() == 4);
    for (const auto& ip : cc) {
      CHECK(ip.multiplicity == 1);
      CHECK(F.evaluate(ip.point).is_zero());
      CHECK(G.evaluate(ip.point).is_zero());
      CHECK(transversal_at(F, G, ip.point));
      CHECK(abs(ip.point[0].rational_value()) == 1);
      CHECK(abs(ip.point[1].rational_value()) == 1);
      CHECK(abs(ip.point[2].rational_value()) == 1);
    }

    CHECK(kind_of([] { intersect(conic(1, 1, -1, 0, 0, 0), line(0, 0, 1)); }) ==
          GeometryErrorKind::IntersectionOutsideField);
    CHECK(kind_of([] { intersect(line(1, 2, 3), line(2, 4, 6)); }) == GeometryErrorKind::ProportionalCurves);
  }

  TEST_CASE("tangency gives multiplicity two") {
    // X^2 - YZ and Y = 0 meet only at (0:0:1).
    const auto C = conic(1, 0, 0, 0, 0, -1), L = line(0, 1, 0);
    const auto pts = intersect(C, L);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].multiplicity == 2);
    CHECK_FALSE(transversal_at(C, L, pt(0, 0, 1)));
    CHECK(transversal_at(conic(1, 1, -2, 0, 0, 0), conic(2, -1, -1, 0, 0, 0), pt(1, 1, 1)));
    CHECK(transversal_at(line(1, 0, 0), line(1, 1, 0), pt(0, 0, 1)));
    CHECK(kind_of([&] { transversal_at(C, L, pt(1, 0, 0)); }) == GeometryErrorKind::NotOnCurve);

    // Two conics tangent at one point: X^2 - YZ and X^2 - YZ + Y^2.
    const auto tangent = intersect(conic(1, 0, 0, 0, 0, -1), conic(1, 1, 0, 0, 0, -1));
    int total = 0;
    for (const auto& ip : tangent) total += ip.multiplicity;
    CHECK(total == 4);
  }

  TEST_CASE("intersections over quadratic fields") {
    std::vector<Rational> m3{Rational(-3), Rational(0), Rational(1)};
    const auto f = NumberField::create(QPoly(m3));
    auto c = [&](long x) { return FieldElement::from_rational(f, Rational(x)); };
    const auto C1 = PlaneCurve::conic({c(1), c(1), c(-4), c(0), c(0), c(0)});
    const auto C2 = PlaneCurve::conic({c(1), c(-1), c(-2), c(0), c(0), c(0)});
    const auto pts = intersect(C1, C2);
    REQUIRE(pts.size() == 4);
    for (const auto& ip : pts) {
      CHECK(C1.evaluate(ip.point).is_zero());
      CHECK(C2.evaluate(ip.point).is_zero());
      CHECK(ip.point[0] * ip.point[0] == c(3) * ip.point[2] * ip.point[2]);
    }
    const auto lc = intersect(PlaneCurve::conic({c(1), c(1), c(-3), c(0), c(0), c(0)}),
                              PlaneCurve::line({c(0), c(1), c(0)}));
    CHECK(lc.size() == 2);

    std::vector<Rational> mi{Rational(1), Rational(0), Rational(1)};
    const auto gi = NumberField::create(QPoly(mi));
    auto ci = [&](long x) { return FieldElement::from_rational(gi, Rational(x)); };
    const auto at_infinity = intersect(PlaneCurve::conic({ci(1), ci(1), ci(-1), ci(0), ci(0), ci(0)}),
                                       PlaneCurve::line({ci(0), ci(0), ci(1)}));
    CHECK(at_infinity.size() == 2);
  }

  TEST_CASE("profile extraction examples") {
    const auto generic = extract_profile(GeometricConfiguration(Q, {line(1, 0, 0), line(0, 1, 0), line(0, 0, 1),
                                                                    line(1, 2, 3)}));
    CHECK(generic == ConfigurationProfile(CurveClass::line(), 4, {{2, 6}}));

    const auto concurrent =
        extract_profile(GeometricConfiguration(Q, {line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)}));
    CHECK(concurrent == ConfigurationProfile(CurveClass::line(), 3, {{3, 1}}));

    const GeometricConfiguration pencil(Q, {pencil_member(1, 0), pencil_member(0, 1), pencil_member(1, 2),
                                            pencil_member(2, 1), pencil_member(1, 3)});
    const auto p = extract_profile(pencil);
    CHECK(p == ConfigurationProfile(CurveClass::conic(), 5, {{5, 4}}));
    CHECK(local_h(p).h == 0);
    CHECK(extract_profile_serial(pencil) == p);
  }

  TEST_CASE("extraction errors") {
    CHECK(kind_of([] { GeometricConfiguration(Q, {line(1, 0, 0), conic(1, 1, -2, 0, 0, 0)}).curve_class(); }) ==
          GeometryErrorKind::MixedClasses);
    CHECK(kind_of([] { extract_profile(GeometricConfiguration(Q, {conic(1, 0, 0, 0, 0, -1), conic(1, 1, 0, 0, 0, -1)})); }) ==
          GeometryErrorKind::NonTransversalIntersection);
    CHECK(kind_of([] { GeometricConfiguration(Q, {line(1, 0, 0), line(2, 0, 0)}); }) ==
          GeometryErrorKind::ProportionalCurves);
    CHECK(kind_of([] { extract_profile(GeometricConfiguration(Q, {conic(1, 1, -3, 0, 0, 0), conic(1, -1, -1, 0, 0, 0)})); }) ==
          GeometryErrorKind::IntersectionOutsideField);
  }

  TEST_CASE("extraction matches the incidence-count oracle") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 80; ++trial) {
      std::uniform_int_distribution<int> kd(2, 10);
      const auto lines = random_lines(rng, kd(rng), trial % 2 ? 2 : 6);
      const auto config = as_config(lines);
      const auto got = extract_profile(config);
      CHECK(got.t() == oracle::line_profile(lines));
      CHECK(extract_profile_serial(config) == got);
    }
  }

  TEST_CASE("Cremona on points") {
    CHECK(cremona_map_point(pt(1, 2, 3)) == pt(6, 3, 2));
    CHECK(cremona_map_point(pt(1, 1, 1)) == pt(1, 1, 1));
    CHECK(cremona_map_point(cremona_map_point(pt(2, 3, 5))) == pt(2, 3, 5));
    CHECK(kind_of([] { cremona_map_point(pt(0, 1, 0)); }) == GeometryErrorKind::BasePoint);
  }

  TEST_CASE("Cremona on curves") {
    CHECK(cremona_map_curve(line(1, 1, 1)) == conic(0, 0, 0, 1, 1, 1));
    CHECK(cremona_map_curve(conic(0, 0, 0, 1, 1, 1)) == line(1, 1, 1));
    CHECK(kind_of([] { cremona_map_curve(conic(1, 1, -2, 0, 0, 0)); }) == GeometryErrorKind::DegreeOutOfRange);
    CHECK(kind_of([] { cremona_map_curve(line(1, 0, 0)); }) == GeometryErrorKind::ContractedCurve);
    // A line through one vertex goes to a line through the same vertex.
    CHECK(cremona_map_curve(line(0, 1, 1)) == line(0, 1, 1));
    // A conic through two vertices goes to a conic through two vertices.
    const auto c2 = conic(0, 0, 2, 1, 1, 1);
    CHECK(cremona_map_curve(cremona_map_curve(c2)) == c2);
  }

  TEST_CASE("Cremona involution on random curves and points") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int i = 0; i < 100; ++i) {
      const int a = d(rng), b = d(rng), c = d(rng);
      if (a == 0 || b == 0 || c == 0) continue;
      const auto l = line(a, b, c);
      CHECK(cremona_map_curve(cremona_map_curve(l)) == l);
      const auto p = pt(a, b, c);
      CHECK(cremona_map_point(cremona_map_point(p)) == p);
    }
  }

  TEST_CASE("quadric correspondence") {
    const auto m = to_quadric_curve(conic(0, 0, -1, 1, 0, 0));
    // Up to scale [[1, 0], [0, -1]].
    CHECK_FALSE(m.m[0][0].is_zero());
    CHECK(m.m[1][1] == -m.m[0][0]);
    CHECK(m.m[0][1].is_zero());
    CHECK(m.m[1][0].is_zero());
    for (long s : {1L, 2L, -3L}) {
      // (s : 1/s : 1) lies on XY - Z^2; scaled to integers (s^2 : 1 : s).
      const auto p = pt(s * s, 1, s);
      REQUIRE(incident(conic(0, 0, -1, 1, 0, 0), p));
      const auto [u, v] = to_quadric_point(p);
      CHECK(m(u, v).is_zero());
    }
    CHECK(kind_of([] { conic(0, 0, 0, 0, 1, 1); }) == GeometryErrorKind::ReducibleCurve);
    CHECK(kind_of([] { to_quadric_curve(conic(1, 0, -1, 1, 0, 0)); }) == GeometryErrorKind::NotOnCurve);

    const auto c = conic(0, 0, 0, 1, 1, 1);
    const auto q = to_quadric_curve(c);
    int checked = 0;
    for (long t = 1; checked < 4 && t < 20; ++t) {
      // Points of XY + XZ + YZ: (t : 1 : -t/(t+1)) scaled.
      const auto p = pt(t * (t + 1), t + 1, -t);
      REQUIRE(incident(c, p));
      const auto [u, v] = to_quadric_point(p);
      CHECK(q(u, v).is_zero());
      ++checked;
    }
    CHECK(checked == 4);
    CHECK(kind_of([] { to_quadric_point(pt(1, 0, 0)); }) == GeometryErrorKind::BasePoint);
  }

  TEST_CASE("projectivity to the coordinate triangle") {
    const auto T = Projectivity::to_coordinate_triangle(pt(1, 1, 1), pt(1, -1, 1), pt(-1, 1, 1));
    CHECK(T.apply(pt(1, 1, 1)) == pt(1, 0, 0));
    CHECK(T.apply(pt(1, -1, 1)) == pt(0, 1, 0));
    CHECK(T.apply(pt(-1, 1, 1)) == pt(0, 0, 1));
    const auto F = conic(1, 1, -2, 0, 0, 0);
    const auto image = T.apply(F);
    CHECK(incident(image, pt(1, 0, 0)));
    CHECK(incident(image, pt(0, 1, 0)));
    CHECK(incident(image, pt(0, 0, 1)));
    CHECK(T.inverse().apply(image) == F);
    CHECK(kind_of([] { Projectivity::to_coordinate_triangle(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)); }) ==
          GeometryErrorKind::InvalidPoint);
  }

  TEST_CASE("common-point Cremona at coordinate level") {
    // Conics through the triangle: d XY + e XZ + f YZ, image f X + e Y + d Z.
    const GeometricConfiguration conics(
        Q, {conic(0, 0, 0, 1, 1, 1), conic(0, 0, 0, 1, 2, 3), conic(0, 0, 0, 2, -1, 1), conic(0, 0, 0, 3, 1, -2)});
    const auto before = extract_profile(conics);
    REQUIRE(before.top_count() == 3);
    const auto after = extract_profile(cremona_transform(conics));
    CHECK(after == cremona_profile(before, CremonaMode::CommonPoints));
  }
}
