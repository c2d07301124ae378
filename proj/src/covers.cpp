#include "harbourne/covers.hpp"

#include <sstream>
#include <stdexcept>

#include "harbourne/errors.hpp"

namespace harbourne {

namespace {

std::size_t idx(Symbol s) { return static_cast<std::size_t>(s); }

bool all_zero(const FormalExpr::Coefficients& c) {
  for (const auto& x : c) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

SymbolValues SymbolValues::of(const ConfigurationProfile& profile) {
  SymbolValues v{Rational(profile.k()), Rational(profile.count(2)), Rational(0), Rational(0), Rational(0)};
  for (const auto& [r, t] : profile.t()) {
    if (r < 3) continue;
    const Rational tr(static_cast<long>(t));
    v.s0 += tr;
    v.s1 += Rational(r) * tr;
    v.s2 += Rational(static_cast<long>(r) * r) * tr;
  }
  return v;
}

Rational SymbolValues::operator[](Symbol s) const {
  switch (s) {
    case Symbol::One: return Rational(1);
    case Symbol::K: return k;
    case Symbol::K2: return Rational(k * k);
    case Symbol::T2: return t2;
    case Symbol::S0: return s0;
    case Symbol::S1: return s1;
    case Symbol::S2: return s2;
  }
  return Rational(0);
}

FormalExpr FormalExpr::term(const Rational& c, Symbol symbol, int power) {
  if (power < 0) throw std::invalid_argument("negative power of n");
  FormalExpr e;
  e.by_power_[power][idx(symbol)] = c;
  e.trim();
  return e;
}

Rational FormalExpr::coeff(int power, Symbol symbol) const {
  auto it = by_power_.find(power);
  return it == by_power_.end() ? Rational(0) : it->second[idx(symbol)];
}

int FormalExpr::degree() const { return by_power_.empty() ? -1 : by_power_.rbegin()->first; }

void FormalExpr::trim() {
  for (auto it = by_power_.begin(); it != by_power_.end();) {
    it = all_zero(it->second) ? by_power_.erase(it) : std::next(it);
  }
}

FormalExpr& FormalExpr::operator+=(const FormalExpr& o) {
  for (const auto& [p, c] : o.by_power_) {
    auto& mine = by_power_[p];
    for (std::size_t i = 0; i < kSymbolCount; ++i) mine[i] += c[i];
  }
  trim();
  return *this;
}

FormalExpr& FormalExpr::operator-=(const FormalExpr& o) {
  for (const auto& [p, c] : o.by_power_) {
    auto& mine = by_power_[p];
    for (std::size_t i = 0; i < kSymbolCount; ++i) mine[i] -= c[i];
  }
  trim();
  return *this;
}

FormalExpr operator*(const Rational& c, const FormalExpr& e) {
  FormalExpr out = e;
  for (auto& [p, coeffs] : out.by_power_) {
    for (auto& x : coeffs) x *= c;
  }
  out.trim();
  return out;
}

FormalExpr FormalExpr::at(const Rational& n0) const {
  FormalExpr out;
  for (const auto& [p, c] : by_power_) {
    Rational scale(1);
    for (int i = 0; i < p; ++i) scale *= n0;
    auto& dst = out.by_power_[0];
    for (std::size_t i = 0; i < kSymbolCount; ++i) dst[i] += scale * c[i];
  }
  out.trim();
  return out;
}

Rational FormalExpr::evaluate(const Rational& n, const SymbolValues& v) const {
  Rational acc(0);
  for (const auto& [p, c] : by_power_) {
    Rational scale(1);
    for (int i = 0; i < p; ++i) scale *= n;
    for (std::size_t i = 0; i < kSymbolCount; ++i) acc += scale * c[i] * v[static_cast<Symbol>(i)];
  }
  return acc;
}

FormalExpr FormalExpr::reduce_k2() const {
  FormalExpr out = *this;
  for (auto& [p, c] : out.by_power_) {
    const Rational q = c[idx(Symbol::K2)];
    c[idx(Symbol::K2)] = 0;
    c[idx(Symbol::K)] += q;
    c[idx(Symbol::T2)] += q;
    c[idx(Symbol::S2)] += q / 2;
    c[idx(Symbol::S1)] -= q / 2;
  }
  out.trim();
  return out;
}

bool operator==(const FormalExpr& a, const FormalExpr& b) { return a.by_power_ == b.by_power_; }

std::string FormalExpr::to_string() const {
  static const char* names[] = {"", "k", "k^2", "t2", "S0", "S1", "S2"};
  if (by_power_.empty()) return "0";
  std::ostringstream os;
  bool first_power = true;
  for (auto it = by_power_.rbegin(); it != by_power_.rend(); ++it) {
    if (!first_power) os << " + ";
    first_power = false;
    if (it->first > 0) os << "n^" << it->first << "*";
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      const Rational& c = it->second[i];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      const Rational mag = abs(c);
      if (i == 0) {
        os << harbourne::to_string(mag);
      } else {
        if (mag != 1) os << harbourne::to_string(mag) << "*";
        os << names[i];
      }
    }
    os << ")";
  }
  return os.str();
}

Integer local_curve_euler(int r, int n) {
  if (r < 3) throw std::invalid_argument("local_curve_euler needs r >= 3");
  if (n < 2) throw std::invalid_argument("local_curve_euler needs n >= 2");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r - 2));
  Integer result = p * n * (2 - r) + p * r;
  return result;
}

FormalExpr euler_expr() {
  using S = Symbol;
  auto t = [](long c, Symbol s, int p = 0) { return FormalExpr::term(Rational(c), s, p); };
  // f0 = t2 + S0, f1 = 2 t2 + S1.
  FormalExpr n2 = t(4, S::One, 2) - t(2, S::K, 2) + t(1, S::T2, 2) + t(1, S::S1, 2) - t(1, S::S0, 2);
  FormalExpr n1 = t(2, S::K, 1) - t(2, S::T2, 1) + t(2, S::S0, 1) - t(2, S::S1, 1);
  FormalExpr n0 = t(1, S::T2) + t(1, S::S1);
  return n2 + n1 + n0;
}

FormalExpr canonical_square_expr() {
  using S = Symbol;
  auto t = [](long c, Symbol s, int p = 0) { return FormalExpr::term(Rational(c), s, p); };
  // (1-r)^2 = r^2 - 2r + 1, (r-2)^2 = r^2 - 4r + 4.
  FormalExpr n0 = t(2, S::K2) - t(1, S::S2) + t(2, S::S1) - t(1, S::S0);
  FormalExpr n1 = t(8, S::K, 1) - t(4, S::K2, 1) + t(2, S::S2, 1) - t(6, S::S1, 1) + t(4, S::S0, 1);
  FormalExpr n2 = t(8, S::One, 2) - t(8, S::K, 2) + t(2, S::K2, 2) - t(1, S::S2, 2) + t(4, S::S1, 2) - t(4, S::S0, 2);
  return n0 + n1 + n2;
}

FormalExpr unreduced_margin() { return Rational(3) * euler_expr() - canonical_square_expr(); }

FormalExpr miyaoka_yau_margin(int n0) {
  if (n0 < 2) throw std::invalid_argument("miyaoka_yau_margin needs n >= 2");
  return unreduced_margin().at(Rational(n0)).reduce_k2();
}

FormalExpr expected_margin_at_three() {
  using S = Symbol;
  auto t = [](long c, Symbol s, int p = 0) { return FormalExpr::term(Rational(c), s, p); };
  // sum_{r>=3} (r - 4) t_r = S1 - 4 S0.
  FormalExpr inner = t(9, S::One) + t(1, S::K) + t(1, S::T2) - t(1, S::S1) + t(4, S::S0);
  return Rational(4) * inner;
}

Rational margin_on_profile(const ConfigurationProfile& profile, int n0) {
  if (profile.curve_class().kind() != CurveKind::OneOneQuadric) {
    throw HypothesisError("the cover margin is defined for (1,1)-curve configurations");
  }
  require_valid(profile);
  return miyaoka_yau_margin(n0).evaluate(Rational(n0), SymbolValues::of(profile));
}

}  // namespace harbourne
