#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace harbourne {

enum class CurveKind { LineP2, ConicP2, PlaneCurveP2, OneOneQuadric };

/// The class of curves a configuration is made of, together with the Bezout
/// number of two of its members.
///
/// Plane curves of degree 1 and 2 are always represented as LineP2 and
/// ConicP2, so equal classes compare equal regardless of how they were built.
class CurveClass {
 public:
  static CurveClass line() { return CurveClass(CurveKind::LineP2, 1); }
  static CurveClass conic() { return CurveClass(CurveKind::ConicP2, 2); }
  static CurveClass plane_curve(int degree);
  static CurveClass one_one() { return CurveClass(CurveKind::OneOneQuadric, 0); }

  CurveKind kind() const noexcept { return kind_; }
  bool is_plane() const noexcept { return kind_ != CurveKind::OneOneQuadric; }

  /// Degree of a member on P^2. Throws std::logic_error for the quadric.
  int plane_degree() const;

  /// d^2 on P^2, (1,1).(1,1) = 2 on P^1 x P^1.
  std::int64_t pairwise_intersection() const noexcept;

  /// Document name: "line-p2", "conic-p2", "plane-curve-p2(d)", "one-one-quadric".
  std::string name() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  CurveClass(CurveKind kind, int degree) : kind_(kind), degree_(degree) {}

  CurveKind kind_;
  int degree_;
};

/// Sparse multiplicity histogram r -> t_r.
using Multiplicities = std::map<int, std::int64_t>;

/// Largest accepted values. They keep every moment and identity side well
/// inside int64.
struct ProfileLimits {
  static constexpr int max_k = 10000;
  static constexpr std::int64_t max_count = 1000000;
  static constexpr int max_plane_degree = 100;
};

/// Combinatorial record of a configuration: curve class, number of curves k
/// and the number t_r of points where exactly r curves meet.
///
/// Construction rejects keys r < 2 (a malformed histogram, not a profile that
/// merely fails validation) and values outside ProfileLimits. Zero counts are
/// dropped. All other invariants are checked by validate().
class ConfigurationProfile {
 public:
  ConfigurationProfile(CurveClass curve_class, int k, Multiplicities t);

  const CurveClass& curve_class() const noexcept { return class_; }
  int k() const noexcept { return k_; }
  const Multiplicities& t() const noexcept { return t_; }

  /// t_r, zero when absent.
  std::int64_t count(int r) const;
  /// t_k, the number of points common to all curves.
  std::int64_t top_count() const { return count(k_); }

  friend bool operator==(const ConfigurationProfile&, const ConfigurationProfile&) = default;

 private:
  CurveClass class_;
  int k_;
  Multiplicities t_;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

/// Both sides of the incidence identity sum_r C(r,2) t_r = I * C(k,2),
/// I the pairwise intersection number of the class.
struct IncidenceSides {
  std::int64_t lhs;
  std::int64_t rhs;
};

IncidenceSides incidence_sides(const ConfigurationProfile& profile);

ValidationReport validate(const ConfigurationProfile& profile);

/// Throws InvalidProfile carrying the validation summary.
void require_valid(const ConfigurationProfile& profile);

/// f_i = sum_r r^i t_r.
struct MomentSet {
  std::int64_t f0 = 0;
  std::int64_t f1 = 0;
  std::int64_t f2 = 0;

  friend bool operator==(const MomentSet&, const MomentSet&) = default;
};

/// Moments of a validating profile. Throws InvalidProfile otherwise.
MomentSet moments(const ConfigurationProfile& profile);

/// Moments with the multiplicity value `excluded_r` left out of the sums
/// (the g_j used when the k-fold points are treated separately).
MomentSet moments_excluding(const ConfigurationProfile& profile, int excluded_r);

}  // namespace harbourne
