// Command-line front end.
//
// Exit codes: 0 ok, 1 invalid input (parse, validation, hypotheses),
// 2 computation failure, 3 fixture or verification mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "harbourne/configuration.hpp"
#include "harbourne/constraints.hpp"
#include "harbourne/covers.hpp"
#include "harbourne/cremona.hpp"
#include "harbourne/errors.hpp"
#include "harbourne/harbourne_constant.hpp"
#include "harbourne/json_io.hpp"
#include "harbourne/search.hpp"

using namespace harbourne;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kComputation = 2;
constexpr int kMismatch = 3;

bool machine = false;

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string show(const Rational& q) {
  if (q.get_den() == 1) return to_string(q);
  return to_string(q) + " (" + to_decimal(q, 4) + ")";
}

std::string show_profile(const ConfigurationProfile& p) {
  std::ostringstream os;
  os << p.curve_class().name() << ", k=" << p.k() << ",";
  for (const auto& [r, t] : p.t()) os << " t" << r << "=" << t;
  return os.str();
}

Json validation_json(const ValidationReport& report) {
  Json v = Json::array();
  for (const auto& x : report.violations) v.push_back({{"invariant", x.invariant}, {"detail", x.detail}});
  return {{"ok", report.ok()}, {"violations", v}};
}

Json moments_json(const MomentSet& m) { return {{"f0", m.f0}, {"f1", m.f1}, {"f2", m.f2}}; }

Json case_json(const CaseBound& c) {
  Json out{{"tag", to_string(c.tag)},
           {"bound", c.bound ? Json(to_string(*c.bound)) : Json(nullptr)},
           {"strict", c.strict},
           {"provenance", c.provenance}};
  if (c.printed_tk2_bound) out["displayed_tk2_bound"] = to_string(*c.printed_tk2_bound);
  return out;
}

// ---------------------------------------------------------------- analyze

int run_analyze(const std::string& path) {
  const ConfigurationProfile profile = profile_from_json(read_document(path));
  const ValidationReport report = validate(profile);
  if (!report.ok()) {
    if (machine) {
      emit({{"profile", to_json(profile)}, {"validation", validation_json(report)}});
    } else {
      std::cout << "profile    " << show_profile(profile) << "\n";
      for (const auto& v : report.violations) std::cout << "violation  " << v.invariant << ": " << v.detail << "\n";
    }
    return kInvalid;
  }

  const MomentSet m = moments(profile);
  const HReport h = local_h(profile);
  const std::int64_t k = profile.k();
  Json constraints = Json::object();
  std::ostringstream human;

  if (profile.curve_class().kind() == CurveKind::ConicP2 && k >= 3 && profile.top_count() == 0) {
    const QuadraticConstraint q = lt_polynomial(profile);
    const IntegerCertificate cert = holds_over_integers(q);
    const InstantiationResult at1 = lt_at_one(profile);
    Json c{{"a", q.a}, {"b", q.b}, {"c", q.c}, {"holds", cert.holds}, {"at_one", at1.lhs}};
    if (cert.witness) {
      c["witness"] = cert.witness->get_str();
      c["value"] = cert.value->get_str();
    }
    constraints["lt_polynomial"] = c;
    human << "LT poly    " << q.a << " x^2 + " << q.b << " x + " << q.c << "  "
          << (cert.holds ? "nonnegative on Z" : "NEGATIVE at x=" + cert.witness->get_str()) << "; F(1) = " << at1.lhs
          << "\n";
  }
  if (profile.curve_class().kind() == CurveKind::OneOneQuadric && k >= 4 && profile.top_count() == 0) {
    const HirzebruchResult r = hirzebruch_one_one(profile);
    constraints["hirzebruch_one_one"] = {
        {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}, {"k_minus_4_rhs", r.statement_rhs}};
    human << "(1,1) ineq " << r.lhs << " >= " << r.rhs << "  " << (r.holds ? "holds" : "FAILS")
          << "  [(k-4) summand variant: rhs " << r.statement_rhs << "]\n";
  }
  const CaseBound cb = classify_conic_case(profile);

  if (machine) {
    emit({{"profile", to_json(profile)},
          {"validation", validation_json(report)},
          {"moments", moments_json(m)},
          {"h_report", to_json(h)},
          {"constraints", constraints},
          {"case", case_json(cb)}});
    return kOk;
  }
  const auto sides = incidence_sides(profile);
  std::cout << "profile    " << show_profile(profile) << "\n"
            << "identity   " << sides.lhs << " = " << sides.rhs << "  ok\n"
            << "moments    f0=" << m.f0 << " f1=" << m.f1 << " f2=" << m.f2 << "\n"
            << "s          " << h.s << "\n"
            << "numerator  " << h.numerator << "  (D^2 = " << h.divisor_square << ")\n"
            << "h          " << show(h.h) << "\n"
            << human.str() << "case       " << to_string(cb.tag);
  if (cb.bound) std::cout << "  h " << (cb.strict ? "> " : ">= ") << show(*cb.bound);
  std::cout << "\n";
  if (cb.printed_tk2_bound) std::cout << "           displayed t_k=2 expression: " << show(*cb.printed_tk2_bound) << "\n";
  if (!cb.provenance.empty()) std::cout << "           " << cb.provenance << "\n";
  return kOk;
}

// ---------------------------------------------------------------- geom

int run_geom(const std::string& path) {
  const GeometricConfiguration config = geometry_from_json(read_document(path));
  const auto points = singular_points(config);
  const ConfigurationProfile profile = extract_profile(config);
  const HReport h = local_h(profile);
  if (machine) {
    Json pts = Json::array();
    for (const auto& sp : points) pts.push_back({{"point", to_json(sp.point)}, {"curves", sp.curves}});
    emit({{"profile", to_json(profile)}, {"singular_points", pts}, {"h_report", to_json(h)}});
    return kOk;
  }
  std::cout << "field      " << config.field()->to_string() << "\n";
  for (const auto& sp : points) {
    std::cout << "point      " << sp.point.to_string() << "  r=" << sp.curves.size() << "  curves";
    for (auto c : sp.curves) std::cout << " " << c;
    std::cout << "\n";
  }
  std::cout << "profile    " << show_profile(profile) << "\n"
            << "h          " << show(h.h) << "  (s=" << h.s << ", numerator " << h.numerator << ")\n";
  return kOk;
}

// ---------------------------------------------------------------- cremona

int run_cremona(const std::string& path, CremonaMode mode) {
  const Json doc = read_document(path);
  if (doc.is_object() && doc.contains("curves")) {
    const GeometricConfiguration before = geometry_from_json(doc);
    const GeometricConfiguration after = cremona_transform(before);
    const ConfigurationProfile p0 = extract_profile(before), p1 = extract_profile(after);
    const HReport h0 = local_h(p0), h1 = local_h(p1);
    if (machine) {
      emit({{"before", {{"profile", to_json(p0)}, {"h_report", to_json(h0)}}},
            {"after", {{"geometry", to_json(after)}, {"profile", to_json(p1)}, {"h_report", to_json(h1)}}}});
      return kOk;
    }
    std::cout << "before     " << show_profile(p0) << "  h=" << show(h0.h) << "\n";
    for (const auto& c : after.curves()) std::cout << "image      " << c.to_string() << "\n";
    std::cout << "after      " << show_profile(p1) << "  h=" << show(h1.h) << "\n";
    return kOk;
  }

  const ConfigurationProfile before = profile_from_json(doc);
  const ConfigurationProfile after = cremona_profile(before, mode);
  const HReport h0 = local_h(before), h1 = local_h(after);
  std::optional<Rational> law;
  if (mode == CremonaMode::GenericPoints) law = h_transformation_law(h0.h, h0.s);
  const bool law_ok = !law || *law == h1.h;
  if (machine) {
    Json out{{"mode", to_string(mode)},
             {"before", {{"profile", to_json(before)}, {"h_report", to_json(h0)}}},
             {"after", {{"profile", to_json(after)}, {"h_report", to_json(h1)}}}};
    if (law) out["law"] = {{"predicted_h", to_string(*law)}, {"agrees", law_ok}};
    emit(out);
  } else {
    std::cout << "mode       " << to_string(mode) << "\n"
              << "before     " << show_profile(before) << "\n"
              << "           s=" << h0.s << " numerator " << h0.numerator << " h=" << show(h0.h) << "\n"
              << "after      " << show_profile(after) << "\n"
              << "           s=" << h1.s << " numerator " << h1.numerator << " h=" << show(h1.h) << "\n";
    if (law) std::cout << "law        s/(s+3) h = " << show(*law) << (law_ok ? "  agrees" : "  DISAGREES") << "\n";
  }
  return law_ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- search

CurveClass parse_class(const std::string& s) {
  if (s.rfind("plane-curve-p2:", 0) == 0) {
    const std::string d = s.substr(15);
    try {
      std::size_t used = 0;
      const int degree = std::stoi(d, &used);
      if (used == d.size() && degree >= 1 && degree <= ProfileLimits::max_plane_degree) {
        return CurveClass::plane_curve(degree);
      }
    } catch (const std::exception&) {
    }
    throw ParseError("--class: bad degree in \"" + s + "\"");
  }
  return class_from_json(Json(s), "--class");
}

int run_search(const SearchQuery& q) {
  const SearchResult r = minimize_h(q);
  if (machine) {
    emit(to_json(r));
    return kOk;
  }
  std::cout << "class      " << q.curve_class.name() << ", k=" << q.k << (q.require_tk_zero ? ", t_k=0" : "");
  for (auto f : q.filters) std::cout << ", filter " << to_string(f);
  std::cout << "\nenumerated " << r.enumerated_count << (r.truncated ? " (truncated at limit)" : "") << "\n"
            << "passed     " << r.filtered_count << "\n";
  if (!r.min_h) {
    std::cout << "min h      no feasible profile\n";
    return kOk;
  }
  std::cout << "min h      " << show(*r.min_h) << "  (combinatorially feasible)\n";
  for (const auto& p : r.argmin_profiles) std::cout << "argmin     " << show_profile(p) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- verify-covers

int run_verify_covers(int n) {
  const FormalExpr margin = miyaoka_yau_margin(n);
  const bool check = n == 3;
  const bool ok = !check || margin == expected_margin_at_three();
  if (machine) {
    Json out{{"n", n},
             {"euler", euler_expr().to_string()},
             {"canonical_square", canonical_square_expr().to_string()},
             {"reduced_margin", margin.to_string()}};
    if (check) {
      out["expected"] = expected_margin_at_three().to_string();
      out["agrees"] = ok;
      out["final_form"] = "9 + k + t2 + t3 >= sum_{r>=5} (r-4) t_r";
      out["intermediate_form"] = "9 + k - t2 >= sum_{r>=2} (r-4) t_r";
    }
    emit(out);
  } else {
    std::cout << "e(Y)/n^(k-3)       " << euler_expr().to_string() << "\n"
              << "K_Y^2/n^(k-3)      " << canonical_square_expr().to_string() << "\n"
              << "3e - K^2 at n=" << n << "   " << margin.to_string() << "\n";
    if (check) {
      std::cout << "expected           " << expected_margin_at_three().to_string() << "\n"
                << "                   = 4 (9 + k + t2 - sum_{r>=3} (r-4) t_r)  " << (ok ? "agrees" : "MISMATCH")
                << "\n"
                << "margin >= 0  <=>   9 + k + t2 + t3 >= sum_{r>=5} (r-4) t_r\n"
                << "             <=>   9 + k - t2 >= sum_{r>=2} (r-4) t_r\n";
    }
  }
  return ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- fixtures

struct Row {
  std::string name;
  std::string quantity;
  Rational exact;
  std::string printed;
  bool ok;
};

Row check_value(std::string name, std::string quantity, const Rational& exact, const std::string& printed) {
  // A printed decimal matches when it equals the exact value rounded to the
  // printed precision.
  const auto dot = printed.find('.');
  const int digits = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  const bool ok = round_decimals(exact, digits) == parse_decimal(printed);
  return {std::move(name), std::move(quantity), exact, printed, ok};
}

Row check_count(std::string name, std::string quantity, std::int64_t value, std::int64_t expected) {
  return {std::move(name), std::move(quantity), Rational(static_cast<long>(value)), std::to_string(expected),
          value == expected};
}

GeometricConfiguration pencil_fixture() {
  const FieldPtr q = NumberField::rationals();
  // Members of the pencil spanned by X^2 + Y^2 - 2Z^2 and 2X^2 - Y^2 - Z^2.
  std::vector<PlaneCurve> curves;
  for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 2}, {2, 1}, {1, 3}}) {
    curves.push_back(PlaneCurve::conic(q, Rational(a + 2 * b), Rational(a - b), Rational(-2 * a - b), Rational(0),
                                       Rational(0), Rational(0)));
  }
  return GeometricConfiguration(q, std::move(curves));
}

int run_fixtures() {
  std::vector<Row> rows;
  auto pipeline = [&](const std::string& name, int k, Multiplicities t, const std::string& before_printed,
                      const std::string& after_printed, std::int64_t s_before) {
    const ConfigurationProfile lines(CurveClass::line(), k, std::move(t));
    const HReport h0 = local_h(lines);
    const ConfigurationProfile conics = cremona_profile(lines, CremonaMode::GenericPoints);
    const HReport h1 = local_h(conics);
    rows.push_back(check_count(name, "s before", h0.s, s_before));
    rows.push_back(check_value(name, "h before", h0.h, before_printed));
    rows.push_back(check_count(name, "s after", h1.s, s_before + 3));
    rows.push_back(check_value(name, "h after", h1.h, after_printed));
  };
  pipeline("Klein", 21, {{3, 28}, {4, 21}}, "-3", "-2.827", 49);
  pipeline("Wiman", 45, {{3, 120}, {4, 45}, {5, 36}}, "-3.36", "-3.31", 201);

  const ConfigurationProfile pencil = extract_profile(pencil_fixture());
  rows.push_back(check_count("pencil", "k", pencil.k(), 5));
  rows.push_back(check_count("pencil", "t5", pencil.count(5), 4));
  rows.push_back(check_value("pencil", "h", local_h(pencil).h, "0"));

  bool all = true;
  for (const auto& r : rows) all = all && r.ok;
  if (machine) {
    Json out = Json::array();
    for (const auto& r : rows) {
      out.push_back({{"fixture", r.name}, {"quantity", r.quantity}, {"exact", to_string(r.exact)},
                     {"printed", r.printed}, {"ok", r.ok}});
    }
    emit({{"rows", out}, {"ok", all}});
  } else {
    std::printf("%-8s %-9s %-12s %-10s %-8s %s\n", "fixture", "quantity", "exact", "decimal", "printed", "");
    for (const auto& r : rows) {
      std::printf("%-8s %-9s %-12s %-10s %-8s %s\n", r.name.c_str(), r.quantity.c_str(), to_string(r.exact).c_str(),
                  to_decimal(r.exact, 4).c_str(), r.printed.c_str(), r.ok ? "ok" : "MISMATCH");
    }
  }
  return all ? kOk : kMismatch;
}

int exit_code_for(const GeometryError& e) {
  switch (e.kind()) {
    case GeometryErrorKind::IntersectionOutsideField:
    case GeometryErrorKind::NonTransversalIntersection:
    case GeometryErrorKind::DegreeOutOfRange:
    case GeometryErrorKind::ContractedCurve:
    case GeometryErrorKind::BasePoint:
      return kComputation;
    default:
      return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local Harbourne constants of line, conic and (1,1)-curve configurations"};
  app.require_subcommand(1);
  app.add_flag("--machine", machine, "JSON output");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Validate a profile and compute its H-constant and constraints");
  analyze->add_option("file", file, "profile document")->required();
  auto* geom = app.add_subcommand("geom", "Extract the profile of an explicit configuration");
  geom->add_option("file", file, "geometry document")->required();

  auto* cremona = app.add_subcommand("cremona", "Apply the standard Cremona transformation");
  cremona->add_option("file", file, "profile or geometry document")->required();
  std::string mode = "generic";
  cremona->add_option("--mode", mode, "generic | common3")->check(CLI::IsMember({"generic", "common3"}));

  auto* search = app.add_subcommand("search", "Minimise h over combinatorially feasible profiles");
  std::string cls;
  SearchQuery query;
  std::vector<std::string> filters;
  search->add_option("--class", cls, "line-p2 | conic-p2 | one-one-quadric | plane-curve-p2:<d>")->required();
  search->add_option("--k", query.k, "number of curves")->required();
  search->add_flag("--tk0", query.require_tk_zero, "require t_k = 0");
  search->add_option("--filter", filters, "lt | hirz11")->check(CLI::IsMember({"lt", "hirz11"}));
  search->add_option("--limit", query.limit, "cap on enumerated profiles");

  auto* covers = app.add_subcommand("verify-covers", "Re-derive the Miyaoka-Yau margin for (1,1)-curves");
  int n = 3;
  covers->add_option("--n", n, "cover degree")->check(CLI::Range(2, 1000));

  auto* fixtures = app.add_subcommand("fixtures", "Run the Klein, Wiman and pencil fixtures");

  for (auto* sub : {analyze, geom, cremona, search, covers, fixtures}) sub->add_flag("--machine", machine, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*analyze) return run_analyze(file);
    if (*geom) return run_geom(file);
    if (*cremona) return run_cremona(file, mode == "common3" ? CremonaMode::CommonPoints : CremonaMode::GenericPoints);
    if (*search) {
      query.curve_class = parse_class(cls);
      for (const auto& f : filters) {
        query.filters.push_back(f == "lt" ? SearchFilter::LTPolynomial : SearchFilter::HirzebruchOneOne);
      }
      return run_search(query);
    }
    if (*covers) return run_verify_covers(n);
    if (*fixtures) return run_fixtures();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidProfile& e) {
    std::cerr << "invalid profile: " << e.what() << "\n";
    return kInvalid;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis: " << e.what() << "\n";
    return kInvalid;
  } catch (const GeometryError& e) {
    std::cerr << "geometry: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "computation: " << e.what() << "\n";
    return kComputation;
  }
  return kOk;
}
