#include <doctest.h>

#include "harbourne/errors.hpp"
#include "harbourne/json_io.hpp"

using namespace harbourne;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    profile_from_json(parse_json_text(text, "input"));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("profile round trip") {
    for (const auto& p : {ConfigurationProfile(CurveClass::line(), 21, {{3, 28}, {4, 21}}),
                          ConfigurationProfile(CurveClass::conic(), 5, {{5, 4}}),
                          ConfigurationProfile(CurveClass::one_one(), 4, {{2, 12}}),
                          ConfigurationProfile(CurveClass::plane_curve(3), 3, {{2, 27}})}) {
      const Json j = to_json(p);
      CHECK(profile_from_json(j) == p);
      CHECK(profile_from_json(parse_json_text(j.dump(), "text")) == p);
    }
    CHECK(to_json(ConfigurationProfile(CurveClass::line(), 3, {{3, 1}})).dump() ==
          R"({"class":"line-p2","k":3,"t":{"3":1}})");
  }

  TEST_CASE("profile parse errors name the location") {
    CHECK(parse_error_of(R"({"class":"line-p2","k":3,"t":{"3":1},"extra":0})").find("extra") != std::string::npos);
    CHECK(parse_error_of(R"({"class":"line-p2","k":3,"t":{"1":1}})").find("/t/1") != std::string::npos);
    CHECK(parse_error_of(R"({"class":"line-p2","k":3,"t":{"x":1}})").find("/t/x") != std::string::npos);
    CHECK(parse_error_of(R"({"class":"cubic","k":3,"t":{}})").find("/class") != std::string::npos);
    CHECK(parse_error_of(R"({"class":"line-p2","t":{}})").find("\"k\"") != std::string::npos);
    CHECK(parse_error_of(R"({"class":"line-p2","k":"3","t":{}})").find("/k") != std::string::npos);
    CHECK(parse_error_of(R"({"class":"line-p2","k":3,"t":{"3":1.5}})").find("/t/3") != std::string::npos);
    CHECK(parse_error_of(R"({"class":"line-p2","k":3,)").find("byte") != std::string::npos);
    CHECK_FALSE(parse_error_of(R"({"class":{"plane-curve-p2":{"degree":0}},"k":3,"t":{}})").empty());
  }

  TEST_CASE("invalid but well-formed profiles parse") {
    const auto p = profile_from_json(parse_json_text(R"({"class":"line-p2","k":4,"t":{"2":5}})", "x"));
    CHECK_FALSE(validate(p).ok());
  }

  TEST_CASE("geometry documents") {
    const auto g = geometry_from_json(parse_json_text(
        R"({"field":{"kind":"rational"},"curves":[{"type":"conic","coeffs":[1,1,-2,0,0,0]},
            {"type":"conic","coeffs":["2","-1","-1",0,0,0]}]})",
        "g"));
    CHECK(g.curves().size() == 2);
    CHECK(g.field()->is_rational());
    const auto again = geometry_from_json(to_json(g));
    CHECK(again.curves() == g.curves());

    const auto nf = geometry_from_json(parse_json_text(
        R"({"field":{"kind":"number-field","min_poly":[-3,0,1]},"curves":[{"type":"line","coeffs":[[0,1],1,0]},
            {"type":"line","coeffs":[1,0,"1/2"]}]})",
        "g"));
    CHECK(nf.field()->degree() == 2);
    const auto nf_again = geometry_from_json(to_json(nf));
    CHECK(nf_again.curves() == nf.curves());

    CHECK_THROWS_AS(geometry_from_json(parse_json_text(R"({"field":{"kind":"rational"},"curves":[{"type":"cubic","coeffs":[]}]})", "g")),
                    ParseError);
    CHECK_THROWS_AS(geometry_from_json(parse_json_text(R"({"field":{"kind":"rational"},"curves":[{"type":"line","coeffs":[1,2]}]})", "g")),
                    ParseError);
    CHECK_THROWS_AS(geometry_from_json(parse_json_text(R"({"field":{"kind":"number-field","min_poly":[-4,0,1]},"curves":[]})", "g")),
                    ParseError);
    CHECK_THROWS_AS(geometry_from_json(parse_json_text(R"({"field":{"kind":"rational"},"curves":[{"type":"line","coeffs":["1/0",0,1]}]})", "g")),
                    ParseError);
  }

  TEST_CASE("report round trips") {
    HReport h;
    h.s = 49;
    h.numerator = -147;
    h.h = Rational(-3);
    h.degree_total = 21;
    h.divisor_square = 441;
    const HReport back = hreport_from_json(to_json(h));
    CHECK(back.s == h.s);
    CHECK(back.numerator == h.numerator);
    CHECK(back.h == h.h);
    CHECK(back.degree_total == h.degree_total);
    CHECK(back.divisor_square == h.divisor_square);
    CHECK(to_json(h)["h"] == "-3");

    SearchResult r;
    r.min_h = Rational(-4, 3);
    r.argmin_profiles.push_back(ConfigurationProfile(CurveClass::conic(), 4, {{2, 24}}));
    r.enumerated_count = 9;
    r.filtered_count = 4;
    CHECK(search_result_from_json(to_json(r)) == r);
    CHECK(to_json(r)["min_h"] == "-4/3");
    SearchResult empty;
    CHECK(to_json(empty)["min_h"].is_null());
    CHECK(search_result_from_json(to_json(empty)) == empty);
  }
}
