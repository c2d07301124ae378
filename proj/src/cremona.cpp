#include "harbourne/cremona.hpp"

#include <stdexcept>

#include "harbourne/errors.hpp"

namespace harbourne {

const char* to_string(CremonaMode mode) noexcept {
  return mode == CremonaMode::GenericPoints ? "generic" : "common3";
}

ConfigurationProfile cremona_profile(const ConfigurationProfile& profile, CremonaMode mode) {
  require_valid(profile);
  const int k = profile.k();
  Multiplicities t = profile.t();

  CurveClass out_class = CurveClass::line();
  if (mode == CremonaMode::GenericPoints) {
    if (profile.curve_class().kind() != CurveKind::LineP2) {
      throw HypothesisError("generic-point Cremona is supported for line configurations only; image curves of "
                            "degree >= 2 are singular at the new base points");
    }
    t[k] += 3;
    out_class = CurveClass::conic();
  } else {
    if (profile.curve_class().kind() != CurveKind::ConicP2) {
      throw HypothesisError("common-point Cremona needs a conic configuration");
    }
    if (profile.top_count() != 3) {
      throw HypothesisError("common-point Cremona needs exactly three points on all conics (t_k = 3)");
    }
    t.erase(k);
    out_class = CurveClass::line();
  }

  ConfigurationProfile out(out_class, k, std::move(t));
  const auto report = validate(out);
  if (!report.ok()) throw std::logic_error("Cremona image fails validation: " + report.summary());
  return out;
}

Rational h_transformation_law(const Rational& h_before, std::int64_t s_before) {
  if (s_before < 1) throw std::invalid_argument("s must be positive");
  Rational factor(s_before, s_before + 3);
  factor.canonicalize();
  Rational out = factor * h_before;
  return out;
}

std::vector<RemarkStep> iterate_remark(const Rational& h0, std::int64_t s0, int n) {
  if (n < 0) throw std::invalid_argument("iteration count must be non-negative");
  if (s0 < 1) throw std::invalid_argument("s must be positive");
  std::vector<RemarkStep> steps;
  steps.reserve(static_cast<std::size_t>(n) + 1);
  steps.push_back({h0, s0, Integer(1)});
  for (int i = 0; i < n; ++i) {
    const RemarkStep& last = steps.back();
    RemarkStep next;
    next.h = h_transformation_law(last.h, last.s);
    next.s = last.s + 3;
    next.degree_multiplier = last.degree_multiplier * 2;
    steps.push_back(std::move(next));
  }
  return steps;
}

}  // namespace harbourne
