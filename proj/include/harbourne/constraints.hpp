#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

/// F(x) = a x^2 + b x + c with integer coefficients.
struct QuadraticConstraint {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  Integer operator()(const Integer& x) const;
  friend bool operator==(const QuadraticConstraint&, const QuadraticConstraint&) = default;
};

/// The quadratic (2k + f0) x^2 + 2(3k - f1 + 2 f0) x + 4(f0 - t2), nonnegative
/// on the integers for every transversal configuration of k >= 3 conics with
/// t_k = 0. Throws HypothesisError outside those hypotheses, InvalidProfile
/// for a non-validating profile.
QuadraticConstraint lt_polynomial(const ConfigurationProfile& profile);

struct IntegerCertificate {
  bool holds = true;
  /// Set when holds == false: an integer where F is negative, and F there.
  std::optional<Integer> witness;
  std::optional<Integer> value;
};

/// Decides F(x) >= 0 for all integers x by evaluating the two integers around
/// the vertex -b / 2a. Requires a > 0 (HypothesisError otherwise).
IntegerCertificate holds_over_integers(const QuadraticConstraint& q);

struct InstantiationResult {
  std::int64_t lhs = 0;
  bool holds = false;
};

/// 8k - 2 f1 - 4 t2 + 9 f0, the constraint at x = 1. Same hypotheses as
/// lt_polynomial.
InstantiationResult lt_at_one(const ConfigurationProfile& profile);

struct HirzebruchResult {
  std::int64_t lhs = 0;  ///< 9 + k + t2 + t3
  std::int64_t rhs = 0;  ///< sum_{r>=5} (r-4) t_r
  bool holds = false;
  /// sum_{r>=5} (k-4) t_r, the (k-4) summand variant of the inequality;
  /// kept for comparison only.
  std::int64_t statement_rhs = 0;
};

/// Hirzebruch-type inequality for k >= 4 irreducible (1,1)-curves on
/// P^1 x P^1 with t_k = 0.
HirzebruchResult hirzebruch_one_one(const ConfigurationProfile& profile);

enum class ConicCase { TK0, TK1Open, TK2, TK3, TK4, NotApplicable };

const char* to_string(ConicCase c) noexcept;

/// Lower bound on the conic Harbourne constant by number of points common to
/// all conics.
struct CaseBound {
  ConicCase tag = ConicCase::NotApplicable;
  std::optional<Rational> bound;
  bool strict = false;
  std::string provenance;
  /// t_k = 2 only: the right-hand side (-34 + 2 t2 + f1)/(f0 - 2) - 8,
  /// reported beside the chain derived from hirzebruch_one_one.
  std::optional<Rational> printed_tk2_bound;
};

/// Total on validating profiles (throws InvalidProfile otherwise). Non-conic
/// classes map to NotApplicable.
CaseBound classify_conic_case(const ConfigurationProfile& profile);

}  // namespace harbourne
