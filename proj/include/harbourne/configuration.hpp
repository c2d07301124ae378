#pragma once

#include <cstddef>
#include <vector>

#include "harbourne/curves.hpp"
#include "harbourne/profile.hpp"

namespace harbourne {

/// Explicit configuration of at least two pairwise distinct lines or conics
/// over one field.
class GeometricConfiguration {
 public:
  /// Throws GeometryError(FieldMismatch) when a curve lives over another
  /// field, GeometryError(ProportionalCurves) for a repeated curve and
  /// GeometryError(InvalidCurve) for fewer than two curves.
  GeometricConfiguration(FieldPtr field, std::vector<PlaneCurve> curves);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<PlaneCurve>& curves() const noexcept { return curves_; }
  std::size_t size() const noexcept { return curves_.size(); }

  /// Throws GeometryError(MixedClasses) unless all curves have the same kind.
  CurveClass curve_class() const;

 private:
  FieldPtr field_;
  std::vector<PlaneCurve> curves_;
};

/// A point where at least two curves meet, with the indices of every curve
/// through it (ascending).
struct SingularPoint {
  ProjPoint point;
  std::vector<std::size_t> curves;
};

/// All singular points in canonical point order. Pairwise intersections run
/// in parallel. Throws GeometryError(NonTransversalIntersection) naming the
/// first offending pair and point, and propagates IntersectionOutsideField.
std::vector<SingularPoint> singular_points(const GeometricConfiguration& config);
std::vector<SingularPoint> singular_points_serial(const GeometricConfiguration& config);

/// The t_r histogram of the configuration. A result failing validation
/// would contradict Bezout and raises std::logic_error.
ConfigurationProfile extract_profile(const GeometricConfiguration& config);
ConfigurationProfile extract_profile_serial(const GeometricConfiguration& config);

/// Curve-by-curve image under a projectivity.
GeometricConfiguration transform(const GeometricConfiguration& config, const Projectivity& map);

/// Curve-by-curve image under the standard Cremona map.
GeometricConfiguration cremona_transform(const GeometricConfiguration& config);

}  // namespace harbourne
