#include "harbourne/json_io.hpp"

#include <charconv>
#include <initializer_list>
#include <set>

#include "harbourne/errors.hpp"

namespace harbourne {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void only_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed,
               std::initializer_list<const char*> required) {
  if (!obj.is_object()) fail(where, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) fail(where, "unknown key \"" + key + "\"");
  }
  for (const char* key : required) {
    if (!obj.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
  }
}

std::int64_t integer_field(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    fail(where, "integer out of range");
  }
  return v.get<std::int64_t>();
}

int small_int(const Json& v, const std::string& where) {
  const std::int64_t x = integer_field(v, where);
  if (x < INT32_MIN || x > INT32_MAX) fail(where, "integer out of range");
  return static_cast<int>(x);
}

Rational rational_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

std::string rational_text(const Rational& q) { return to_string(q); }

FieldElement element_field(const Json& v, const FieldPtr& field, const std::string& where) {
  if (v.is_array()) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(rational_field(v[i], where + "/" + std::to_string(i)));
    if (static_cast<int>(c.size()) > field->degree()) fail(where, "more coordinates than the field degree");
    return FieldElement(field, QPoly(std::move(c)));
  }
  return FieldElement::from_rational(field, rational_field(v, where));
}

FieldPtr field_from_json(const Json& doc) {
  const std::string where = "/field";
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) fail(where, "expected {\"kind\": ...}");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "rational") {
    only_keys(doc, where, {"kind"}, {"kind"});
    return NumberField::rationals();
  }
  if (kind != "number-field") fail(where + "/kind", "unknown field kind \"" + kind + "\"");
  only_keys(doc, where, {"kind", "min_poly"}, {"kind", "min_poly"});
  const Json& mp = doc["min_poly"];
  if (!mp.is_array() || mp.size() < 2) fail(where + "/min_poly", "expected an array [c0, ..., 1]");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < mp.size(); ++i) c.push_back(rational_field(mp[i], where + "/min_poly/" + std::to_string(i)));
  try {
    return NumberField::create(QPoly(std::move(c)));
  } catch (const GeometryError& e) {
    fail(where + "/min_poly", e.what());
  }
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

// ---------------------------------------------------------------- profiles

Json class_to_json(const CurveClass& c) {
  switch (c.kind()) {
    case CurveKind::LineP2: return "line-p2";
    case CurveKind::ConicP2: return "conic-p2";
    case CurveKind::OneOneQuadric: return "one-one-quadric";
    case CurveKind::PlaneCurveP2: return Json{{"plane-curve-p2", {{"degree", c.plane_degree()}}}};
  }
  return nullptr;
}

CurveClass class_from_json(const Json& doc, const std::string& where) {
  if (doc.is_string()) {
    const std::string s = doc.get<std::string>();
    if (s == "line-p2") return CurveClass::line();
    if (s == "conic-p2") return CurveClass::conic();
    if (s == "one-one-quadric") return CurveClass::one_one();
    fail(where, "unknown curve class \"" + s + "\"");
  }
  only_keys(doc, where, {"plane-curve-p2"}, {"plane-curve-p2"});
  const Json& inner = doc["plane-curve-p2"];
  only_keys(inner, where + "/plane-curve-p2", {"degree"}, {"degree"});
  const int d = small_int(inner["degree"], where + "/plane-curve-p2/degree");
  if (d < 1 || d > ProfileLimits::max_plane_degree) fail(where + "/plane-curve-p2/degree", "degree out of range");
  return CurveClass::plane_curve(d);
}

ConfigurationProfile profile_from_json(const Json& doc) {
  only_keys(doc, "/", {"class", "k", "t"}, {"class", "k", "t"});
  const CurveClass cls = class_from_json(doc["class"]);
  const int k = small_int(doc["k"], "/k");
  if (k < 0 || k > ProfileLimits::max_k) fail("/k", "k out of range");
  const Json& t = doc["t"];
  if (!t.is_object()) fail("/t", "expected an object of multiplicity counts");
  Multiplicities m;
  for (const auto& [key, value] : t.items()) {
    const std::string where = "/t/" + key;
    int r = 0;
    auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), r);
    if (ec != std::errc() || end != key.data() + key.size()) fail(where, "multiplicity key must be an integer");
    if (r < 2) fail(where, "multiplicity key r must be at least 2");
    if (r > ProfileLimits::max_k) fail(where, "multiplicity key out of range");
    const std::int64_t count = integer_field(value, where);
    if (count > ProfileLimits::max_count || count < -ProfileLimits::max_count) fail(where, "count out of range");
    m[r] = count;
  }
  return ConfigurationProfile(cls, k, std::move(m));
}

Json to_json(const ConfigurationProfile& profile) {
  Json t = Json::object();
  for (const auto& [r, count] : profile.t()) t[std::to_string(r)] = count;
  return Json{{"class", class_to_json(profile.curve_class())}, {"k", profile.k()}, {"t", t}};
}

// ---------------------------------------------------------------- geometry

GeometricConfiguration geometry_from_json(const Json& doc) {
  only_keys(doc, "/", {"field", "curves"}, {"field", "curves"});
  const FieldPtr field = field_from_json(doc["field"]);
  const Json& curves = doc["curves"];
  if (!curves.is_array()) fail("/curves", "expected an array");
  std::vector<PlaneCurve> out;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string where = "/curves/" + std::to_string(i);
    only_keys(curves[i], where, {"type", "coeffs"}, {"type", "coeffs"});
    const Json& type = curves[i]["type"];
    const Json& coeffs = curves[i]["coeffs"];
    if (!type.is_string()) fail(where + "/type", "expected \"line\" or \"conic\"");
    const std::string kind = type.get<std::string>();
    const std::size_t arity = kind == "line" ? 3 : kind == "conic" ? 6 : 0;
    if (arity == 0) fail(where + "/type", "unknown curve type \"" + kind + "\"");
    if (!coeffs.is_array() || coeffs.size() != arity) {
      fail(where + "/coeffs", "expected " + std::to_string(arity) + " coefficients");
    }
    std::vector<FieldElement> c;
    for (std::size_t j = 0; j < arity; ++j) c.push_back(element_field(coeffs[j], field, where + "/coeffs/" + std::to_string(j)));
    if (arity == 3) {
      out.push_back(PlaneCurve::line({c[0], c[1], c[2]}));
    } else {
      out.push_back(PlaneCurve::conic({c[0], c[1], c[2], c[3], c[4], c[5]}));
    }
  }
  return GeometricConfiguration(field, std::move(out));
}

Json to_json(const FieldElement& x) {
  if (x.field()->is_rational()) return rational_text(x.rational_value());
  Json arr = Json::array();
  for (int i = 0; i < x.field()->degree(); ++i) arr.push_back(rational_text(x.value().coeff(i)));
  return arr;
}

Json to_json(const ProjPoint& p) { return Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

Json to_json(const GeometricConfiguration& config) {
  Json field;
  if (config.field()->is_rational()) {
    field = {{"kind", "rational"}};
  } else {
    Json mp = Json::array();
    for (const auto& c : config.field()->modulus().coeffs()) mp.push_back(rational_text(c));
    field = {{"kind", "number-field"}, {"min_poly", mp}};
  }
  Json curves = Json::array();
  for (const auto& c : config.curves()) {
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(to_json(x));
    curves.push_back({{"type", c.kind() == PlaneCurve::Kind::Line ? "line" : "conic"}, {"coeffs", coeffs}});
  }
  return Json{{"field", field}, {"curves", curves}};
}

// ---------------------------------------------------------------- reports

Json to_json(const HReport& r) {
  return Json{{"s", r.s},
              {"numerator", r.numerator},
              {"h", rational_text(r.h)},
              {"degree_total", r.degree_total},
              {"divisor_square", r.divisor_square}};
}

HReport hreport_from_json(const Json& doc) {
  only_keys(doc, "/", {"s", "numerator", "h", "degree_total", "divisor_square"},
            {"s", "numerator", "h", "degree_total", "divisor_square"});
  HReport r;
  r.s = integer_field(doc["s"], "/s");
  r.numerator = integer_field(doc["numerator"], "/numerator");
  r.h = rational_field(doc["h"], "/h");
  r.degree_total = integer_field(doc["degree_total"], "/degree_total");
  r.divisor_square = integer_field(doc["divisor_square"], "/divisor_square");
  return r;
}

Json to_json(const SearchResult& r) {
  Json argmins = Json::array();
  for (const auto& p : r.argmin_profiles) argmins.push_back(to_json(p));
  return Json{{"min_h", r.min_h ? Json(rational_text(*r.min_h)) : Json(nullptr)},
              {"argmin_profiles", argmins},
              {"enumerated_count", r.enumerated_count},
              {"filtered_count", r.filtered_count},
              {"truncated", r.truncated}};
}

SearchResult search_result_from_json(const Json& doc) {
  only_keys(doc, "/", {"min_h", "argmin_profiles", "enumerated_count", "filtered_count", "truncated"},
            {"min_h", "argmin_profiles", "enumerated_count", "filtered_count", "truncated"});
  SearchResult r;
  if (!doc["min_h"].is_null()) r.min_h = rational_field(doc["min_h"], "/min_h");
  const Json& argmins = doc["argmin_profiles"];
  if (!argmins.is_array()) fail("/argmin_profiles", "expected an array");
  for (const auto& p : argmins) r.argmin_profiles.push_back(profile_from_json(p));
  auto count = [&](const char* key) {
    const std::int64_t v = integer_field(doc[key], std::string("/") + key);
    if (v < 0) fail(std::string("/") + key, "expected a nonnegative count");
    return static_cast<std::uint64_t>(v);
  };
  r.enumerated_count = count("enumerated_count");
  r.filtered_count = count("filtered_count");
  if (!doc["truncated"].is_boolean()) fail("/truncated", "expected a boolean");
  r.truncated = doc["truncated"].get<bool>();
  return r;
}

}  // namespace harbourne
