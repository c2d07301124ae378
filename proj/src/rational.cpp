#include "harbourne/rational.hpp"

#include <cctype>

#include "harbourne/errors.hpp"

namespace harbourne {

const char* to_string(GeometryErrorKind kind) noexcept {
  switch (kind) {
    case GeometryErrorKind::IntersectionOutsideField: return "IntersectionOutsideField";
    case GeometryErrorKind::NonTransversalIntersection: return "NonTransversalIntersection";
    case GeometryErrorKind::MixedClasses: return "MixedClasses";
    case GeometryErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case GeometryErrorKind::ContractedCurve: return "ContractedCurve";
    case GeometryErrorKind::ReducibleCurve: return "ReducibleCurve";
    case GeometryErrorKind::InvalidCurve: return "InvalidCurve";
    case GeometryErrorKind::InvalidPoint: return "InvalidPoint";
    case GeometryErrorKind::BasePoint: return "BasePoint";
    case GeometryErrorKind::NotOnCurve: return "NotOnCurve";
    case GeometryErrorKind::ProportionalCurves: return "ProportionalCurves";
    case GeometryErrorKind::FieldMismatch: return "FieldMismatch";
    case GeometryErrorKind::InvalidField: return "InvalidField";
  }
  return "GeometryError";
}

namespace {

bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_unsigned_integer(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_signed_integer(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(to_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_signed_integer(num) || !is_unsigned_integer(den)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer d = to_integer(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational round_decimals(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = q * scale;
  Rational half(1, 2);
  Integer rounded = (scaled >= 0) ? floor(Rational(scaled + half)) : Integer(-floor(Rational(-scaled + half)));
  Rational out(rounded, scale);
  out.canonicalize();
  return out;
}

std::string to_decimal(const Rational& q, int digits) {
  Rational r = round_decimals(q, digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled_q = r * scale;
  Integer scaled = floor(scaled_q);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (!is_unsigned_integer(whole) || (dot != std::string_view::npos && !is_unsigned_integer(frac))) {
    throw ParseError("not a decimal: '" + std::string(text) + "'");
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac.size()));
  Integer digits(std::string(whole) + std::string(frac), 10);
  Rational q(digits, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace harbourne
