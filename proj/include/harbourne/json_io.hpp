#pragma once

#include <string>

#include <json.hpp>

#include "harbourne/configuration.hpp"
#include "harbourne/harbourne_constant.hpp"
#include "harbourne/profile.hpp"
#include "harbourne/search.hpp"

namespace harbourne {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with the byte offset.
Json parse_json_text(const std::string& text, const std::string& source);

/// {"class": ..., "k": int, "t": {"<r>": count}}. Unknown keys, keys r < 2
/// and out-of-range values raise ParseError naming the JSON location.
ConfigurationProfile profile_from_json(const Json& doc);
Json to_json(const ConfigurationProfile& profile);

Json class_to_json(const CurveClass& c);
CurveClass class_from_json(const Json& doc, const std::string& where = "/class");

/// {"field": {"kind": "rational"} | {"kind": "number-field", "min_poly":
/// [c0, ..., 1]}, "curves": [{"type": "line" | "conic", "coeffs": [...]}]}.
/// Rationals are integers or "p/q" strings; number-field coefficients are
/// arrays of rationals in powers of the generator.
GeometricConfiguration geometry_from_json(const Json& doc);
Json to_json(const GeometricConfiguration& config);

Json to_json(const FieldElement& x);
Json to_json(const ProjPoint& p);

Json to_json(const HReport& report);
HReport hreport_from_json(const Json& doc);

Json to_json(const SearchResult& result);
SearchResult search_result_from_json(const Json& doc);

}  // namespace harbourne
