#include "harbourne/configuration.hpp"

#include <exception>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "harbourne/errors.hpp"

namespace harbourne {

GeometricConfiguration::GeometricConfiguration(FieldPtr field, std::vector<PlaneCurve> curves)
    : field_(std::move(field)), curves_(std::move(curves)) {
  if (curves_.size() < 2) throw GeometryError(GeometryErrorKind::InvalidCurve, "a configuration needs two curves");
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (!same_field(*curves_[i].field(), *field_)) {
      throw GeometryError(GeometryErrorKind::FieldMismatch,
                          "curve " + std::to_string(i) + " is defined over " + curves_[i].field()->to_string());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (curves_[i] == curves_[j]) {
        throw GeometryError(GeometryErrorKind::ProportionalCurves,
                            "curves " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
      }
    }
  }
}

CurveClass GeometricConfiguration::curve_class() const {
  for (const auto& c : curves_) {
    if (c.kind() != curves_.front().kind()) {
      throw GeometryError(GeometryErrorKind::MixedClasses, "configuration mixes lines and conics");
    }
  }
  return curves_.front().kind() == PlaneCurve::Kind::Line ? CurveClass::line() : CurveClass::conic();
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<Pair> all_pairs(std::size_t k) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::vector<ProjPoint> transversal_points(const GeometricConfiguration& config, const Pair& pair) {
  const auto& a = config.curves()[pair.first];
  const auto& b = config.curves()[pair.second];
  std::vector<ProjPoint> out;
  for (auto& ip : intersect(a, b)) {
    if (ip.multiplicity != 1 || !transversal_at(a, b, ip.point)) {
      throw GeometryError(GeometryErrorKind::NonTransversalIntersection,
                          "curves " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                              " meet non-transversally at " + ip.point.to_string());
    }
    out.push_back(std::move(ip.point));
  }
  return out;
}

std::vector<SingularPoint> merge(const std::vector<Pair>& pairs, const std::vector<std::vector<ProjPoint>>& points) {
  std::map<ProjPoint, std::set<std::size_t>> grouped;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (const auto& pt : points[p]) {
      auto& s = grouped[pt];
      s.insert(pairs[p].first);
      s.insert(pairs[p].second);
    }
  }
  std::vector<SingularPoint> out;
  for (auto& [pt, curves] : grouped) out.push_back({pt, std::vector<std::size_t>(curves.begin(), curves.end())});
  return out;
}

ConfigurationProfile to_profile(const GeometricConfiguration& config, const std::vector<SingularPoint>& points) {
  const CurveClass cls = config.curve_class();
  Multiplicities t;
  for (const auto& sp : points) ++t[static_cast<int>(sp.curves.size())];
  ConfigurationProfile profile(cls, static_cast<int>(config.size()), std::move(t));
  const auto report = validate(profile);
  if (!report.ok()) throw std::logic_error("extracted profile fails validation: " + report.summary());
  return profile;
}

}  // namespace

std::vector<SingularPoint> singular_points_serial(const GeometricConfiguration& config) {
  config.curve_class();
  const auto pairs = all_pairs(config.size());
  std::vector<std::vector<ProjPoint>> points;
  for (const auto& pair : pairs) points.push_back(transversal_points(config, pair));
  return merge(pairs, points);
}

std::vector<SingularPoint> singular_points(const GeometricConfiguration& config) {
  config.curve_class();
  const auto pairs = all_pairs(config.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
  std::vector<std::vector<ProjPoint>> points(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < n; ++p) {
    try {
      points[static_cast<std::size_t>(p)] = transversal_points(config, pairs[static_cast<std::size_t>(p)]);
    } catch (...) {
      errors[static_cast<std::size_t>(p)] = std::current_exception();
    }
  }

  // Report the error the serial loop would have hit first.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return merge(pairs, points);
}

ConfigurationProfile extract_profile(const GeometricConfiguration& config) {
  return to_profile(config, singular_points(config));
}

ConfigurationProfile extract_profile_serial(const GeometricConfiguration& config) {
  return to_profile(config, singular_points_serial(config));
}

GeometricConfiguration transform(const GeometricConfiguration& config, const Projectivity& map) {
  std::vector<PlaneCurve> out;
  for (const auto& c : config.curves()) out.push_back(map.apply(c));
  return GeometricConfiguration(config.field(), std::move(out));
}

GeometricConfiguration cremona_transform(const GeometricConfiguration& config) {
  std::vector<PlaneCurve> out;
  for (const auto& c : config.curves()) out.push_back(cremona_map_curve(c));
  return GeometricConfiguration(config.field(), std::move(out));
}

}  // namespace harbourne
