#include "harbourne/profile.hpp"

#include <sstream>
#include <stdexcept>

#include "harbourne/errors.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

CurveClass CurveClass::plane_curve(int degree) {
  if (degree < 1 || degree > ProfileLimits::max_plane_degree) {
    throw std::invalid_argument("plane curve degree out of range: " + std::to_string(degree));
  }
  if (degree == 1) return line();
  if (degree == 2) return conic();
  return CurveClass(CurveKind::PlaneCurveP2, degree);
}

int CurveClass::plane_degree() const {
  if (!is_plane()) throw std::logic_error("curves on the quadric have no plane degree");
  return degree_;
}

std::int64_t CurveClass::pairwise_intersection() const noexcept {
  if (kind_ == CurveKind::OneOneQuadric) return 2;
  return static_cast<std::int64_t>(degree_) * degree_;
}

std::string CurveClass::name() const {
  switch (kind_) {
    case CurveKind::LineP2: return "line-p2";
    case CurveKind::ConicP2: return "conic-p2";
    case CurveKind::PlaneCurveP2: return "plane-curve-p2(" + std::to_string(degree_) + ")";
    case CurveKind::OneOneQuadric: return "one-one-quadric";
  }
  return "?";
}

ConfigurationProfile::ConfigurationProfile(CurveClass curve_class, int k, Multiplicities t)
    : class_(curve_class), k_(k) {
  if (k < 0 || k > ProfileLimits::max_k) {
    throw std::invalid_argument("k out of range: " + std::to_string(k));
  }
  for (const auto& [r, count] : t) {
    if (r < 2) throw std::invalid_argument("multiplicity key r=" + std::to_string(r) + " is below 2");
    if (r > ProfileLimits::max_k) throw std::invalid_argument("multiplicity key r=" + std::to_string(r) + " too large");
    if (count > ProfileLimits::max_count || count < -ProfileLimits::max_count) {
      throw std::invalid_argument("count t_" + std::to_string(r) + " out of range");
    }
    if (count != 0) t_.emplace(r, count);
  }
}

std::int64_t ConfigurationProfile::count(int r) const {
  auto it = t_.find(r);
  return it == t_.end() ? 0 : it->second;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].invariant << ": " << violations[i].detail;
  }
  return os.str();
}

IncidenceSides incidence_sides(const ConfigurationProfile& profile) {
  IncidenceSides sides{0, profile.curve_class().pairwise_intersection() * choose2(profile.k())};
  for (const auto& [r, count] : profile.t()) sides.lhs += choose2(r) * count;
  return sides;
}

ValidationReport validate(const ConfigurationProfile& profile) {
  ValidationReport report;
  auto fail = [&](std::string invariant, std::string detail) {
    report.violations.push_back({std::move(invariant), std::move(detail)});
  };
  const int k = profile.k();

  if (k < 2) fail("k-range", "k = " + std::to_string(k) + " is below 2");

  bool any_positive = false;
  for (const auto& [r, count] : profile.t()) {
    if (r > k) fail("multiplicity-range", "r = " + std::to_string(r) + " exceeds k = " + std::to_string(k));
    if (count < 0) fail("non-negative-counts", "t_" + std::to_string(r) + " = " + std::to_string(count));
    if (count > 0) any_positive = true;
  }
  if (!any_positive) fail("nonempty", "no singular points recorded");

  const auto sides = incidence_sides(profile);
  if (sides.lhs != sides.rhs) {
    fail("incidence-identity", "sum C(r,2) t_r = " + std::to_string(sides.lhs) + " but " +
                                   std::to_string(profile.curve_class().pairwise_intersection()) +
                                   " * C(k,2) = " + std::to_string(sides.rhs));
  }

  // Two distinct members share at most I points.
  const auto bound = profile.curve_class().pairwise_intersection();
  if (k >= 2 && profile.top_count() > bound) {
    fail("common-point-bound", "t_k = " + std::to_string(profile.top_count()) + " exceeds " +
                                   std::to_string(bound) + " for " + profile.curve_class().name());
  }
  return report;
}

void require_valid(const ConfigurationProfile& profile) {
  const auto report = validate(profile);
  if (!report.ok()) throw InvalidProfile("invalid profile: " + report.summary());
}

namespace {

MomentSet sum_moments(const ConfigurationProfile& profile, int excluded_r) {
  MomentSet m;
  for (const auto& [r, count] : profile.t()) {
    if (r == excluded_r) continue;
    m.f0 += count;
    m.f1 += static_cast<std::int64_t>(r) * count;
    m.f2 += static_cast<std::int64_t>(r) * r * count;
  }
  return m;
}

}  // namespace

MomentSet moments(const ConfigurationProfile& profile) {
  require_valid(profile);
  return sum_moments(profile, 0);
}

MomentSet moments_excluding(const ConfigurationProfile& profile, int excluded_r) {
  require_valid(profile);
  return sum_moments(profile, excluded_r);
}

}  // namespace harbourne
