#pragma once

#include <cstdint>
#include <span>

#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

/// Local Harbourne constant of a configuration at its singular locus.
///
/// `numerator` is the self-intersection of the strict transform after blowing
/// up the s = f0 singular points, each with multiplicity equal to the number
/// of curves through it. h = numerator / s exactly.
struct HReport {
  std::int64_t s = 0;
  std::int64_t numerator = 0;
  Rational h;
  /// Total degree D of the configuration divisor on P^2 (k * d). On the
  /// quadric the divisor has bidegree (k, k) and this holds k.
  std::int64_t degree_total = 0;
  /// D^2 on P^2, (k,k)^2 = 2k^2 on the quadric.
  std::int64_t divisor_square = 0;
};

/// D^2 - sum m_i^2. Throws std::invalid_argument when D < 1 or some m_i < 2.
std::int64_t strict_transform_self_intersection(std::int64_t degree_total,
                                                std::span<const std::int64_t> multiplicities);

/// Throws InvalidProfile for a non-validating profile.
HReport local_h(const ConfigurationProfile& profile);

/// The reduced numerator d^2 k - f1 (2k - f1 on the quadric), equal to
/// D^2 - f2 whenever the incidence identity holds.
std::int64_t reduced_numerator(const ConfigurationProfile& profile, const MomentSet& m);

}  // namespace harbourne
