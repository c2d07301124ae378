#pragma once

#include <string>
#include <utility>
#include <vector>

#include "harbourne/rational.hpp"

namespace harbourne {

/// Dense univariate polynomial over Q, coefficients stored low degree first
/// with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Zero past the degree.
  Rational coeff(int i) const;
  const Rational& lead() const;

  Rational operator()(const Rational& x) const;
  QPoly derivative() const;
  QPoly monic() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& c, const QPoly& p);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

  std::string to_string(const char* var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Rational roots of p (p nonzero), each listed once, ascending.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace harbourne
