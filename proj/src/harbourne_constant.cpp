#include "harbourne/harbourne_constant.hpp"

#include <stdexcept>

#include "harbourne/errors.hpp"

namespace harbourne {

std::int64_t strict_transform_self_intersection(std::int64_t degree_total,
                                                std::span<const std::int64_t> multiplicities) {
  if (degree_total < 1) throw std::invalid_argument("degree_total must be positive");
  std::int64_t value = degree_total * degree_total;
  for (auto m : multiplicities) {
    if (m < 2) throw std::invalid_argument("blow-up multiplicities must be at least 2");
    value -= m * m;
  }
  return value;
}

std::int64_t reduced_numerator(const ConfigurationProfile& profile, const MomentSet& m) {
  const auto& cls = profile.curve_class();
  return cls.pairwise_intersection() * profile.k() - m.f1;
}

HReport local_h(const ConfigurationProfile& profile) {
  const MomentSet m = moments(profile);
  if (m.f0 == 0) throw ComputationError("no singular points");

  const auto& cls = profile.curve_class();
  HReport report;
  const std::int64_t k = profile.k();
  if (cls.is_plane()) {
    report.degree_total = k * cls.plane_degree();
    report.divisor_square = report.degree_total * report.degree_total;
  } else {
    report.degree_total = k;
    report.divisor_square = 2 * k * k;
  }
  report.s = m.f0;
  report.numerator = report.divisor_square - m.f2;
  if (report.numerator != reduced_numerator(profile, m)) {
    throw std::logic_error("reduced Harbourne numerator disagrees with D^2 - f2");
  }
  report.h = Rational(report.numerator, report.s);
  report.h.canonicalize();
  return report;
}

}  // namespace harbourne
