#pragma once

#include <array>
#include <map>
#include <string>

#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

/// Symbols of the linear basis. S_j stands for sum_{r>=3} r^j t_r.
enum class Symbol { One, K, K2, T2, S0, S1, S2 };

inline constexpr std::size_t kSymbolCount = 7;

/// Values of the symbols (One is always 1).
struct SymbolValues {
  Rational k, t2, s0, s1, s2;

  static SymbolValues of(const ConfigurationProfile& profile);
  Rational operator[](Symbol s) const;
};

/// Polynomial in the cover degree n whose coefficients are rational linear
/// combinations of the symbols.
class FormalExpr {
 public:
  using Coefficients = std::array<Rational, kSymbolCount>;

  FormalExpr() = default;

  /// c * symbol * n^power.
  static FormalExpr term(const Rational& c, Symbol symbol, int power = 0);

  Rational coeff(int power, Symbol symbol) const;
  int degree() const;  ///< -1 for zero

  FormalExpr& operator+=(const FormalExpr& o);
  FormalExpr& operator-=(const FormalExpr& o);
  friend FormalExpr operator+(FormalExpr a, const FormalExpr& b) { return a += b; }
  friend FormalExpr operator-(FormalExpr a, const FormalExpr& b) { return a -= b; }
  friend FormalExpr operator*(const Rational& c, const FormalExpr& e);

  /// Substitutes n = n0, leaving a degree-0 expression.
  FormalExpr at(const Rational& n0) const;
  Rational evaluate(const Rational& n, const SymbolValues& v) const;

  /// Eliminates k^2 with 2k^2 = 2k + 2 t2 + S2 - S1, the quadric incidence
  /// identity.
  FormalExpr reduce_k2() const;

  friend bool operator==(const FormalExpr& a, const FormalExpr& b);

  std::string to_string() const;

 private:
  void trim();

  std::map<int, Coefficients> by_power_;
};

/// e(C_p) = n^(r-1)(2-r) + r n^(r-2). Throws std::invalid_argument unless
/// r >= 3 and n >= 2.
Integer local_curve_euler(int r, int n);

/// e(Y) / n^(k-3) = n^2(4 - 2k + f1 - f0) + 2n(k + f0 - f1) + f1 - t2.
FormalExpr euler_expr();

/// K_Y^2 / n^(k-3) = n^2 K'^2.
FormalExpr canonical_square_expr();

/// 3 e - K^2 before any substitution.
FormalExpr unreduced_margin();

/// 3 e - K^2 at n = n0 with k^2 eliminated. Throws std::invalid_argument for
/// n0 < 2.
FormalExpr miyaoka_yau_margin(int n0);

/// 4 (9 + k + t2 - sum_{r>=3} (r-4) t_r), the expected n = 3 margin.
FormalExpr expected_margin_at_three();

/// The margin at n0 evaluated on a validating quadric profile. Throws
/// HypothesisError for other classes, InvalidProfile for invalid ones.
Rational margin_on_profile(const ConfigurationProfile& profile, int n0);

}  // namespace harbourne
