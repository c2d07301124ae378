#pragma once

#include <cstdint>
#include <vector>

#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

/// Where the three base points of the standard Cremona transformation sit.
enum class CremonaMode {
  /// Three non-collinear points off every curve and off every line joining
  /// two singular points. Genericity is assumed, not certified.
  GenericPoints,
  /// The three points common to all conics of a t_k = 3 conic profile.
  CommonPoints,
};

const char* to_string(CremonaMode mode) noexcept;

/// Profile of the transformed configuration.
///
/// GenericPoints takes k lines to k conics through three new k-fold points.
/// CommonPoints takes the conics of a t_k = 3 profile to k lines and removes
/// the three k-fold points. Throws HypothesisError when the mode does not
/// apply, InvalidProfile for a non-validating input; a transformed profile
/// that fails validation is an internal error (std::logic_error).
ConfigurationProfile cremona_profile(const ConfigurationProfile& profile, CremonaMode mode);

/// s/(s+3) * h: the Harbourne constant after a Cremona transformation at
/// three general points.
Rational h_transformation_law(const Rational& h_before, std::int64_t s_before);

struct RemarkStep {
  Rational h;
  std::int64_t s = 0;
  /// Degree of the curves relative to the starting configuration (2^step).
  Integer degree_multiplier;
};

/// Applies the transformation law n times. Entry 0 is the input; entry i has
/// s0 + 3i blown-up points and h = h0 * s0 / (s0 + 3i).
std::vector<RemarkStep> iterate_remark(const Rational& h0, std::int64_t s0, int n);

}  // namespace harbourne
