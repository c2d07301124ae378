#include "harbourne/number_field.hpp"

#include <sstream>
#include <stdexcept>

#include "harbourne/errors.hpp"
#include "numeric_roots.hpp"

namespace harbourne {

NumberField::NumberField(Token, QPoly modulus)
    : modulus_(std::move(modulus)),
      embeddings_(std::make_shared<detail::EmbeddingTable>(detail::make_embedding_table(modulus_.coeffs()))) {}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = std::make_shared<NumberField>(Token{}, QPoly({Rational(0), Rational(1)}));
  return q;
}

FieldPtr NumberField::create(const QPoly& min_poly) {
  if (min_poly.degree() < 1) throw GeometryError(GeometryErrorKind::InvalidField, "minimal polynomial must have degree >= 1");
  if (min_poly.lead() != 1) throw GeometryError(GeometryErrorKind::InvalidField, "minimal polynomial must be monic");
  if (min_poly.degree() == 1) {
    if (min_poly.coeff(0) == 0) return rationals();
    return std::make_shared<NumberField>(Token{}, min_poly);
  }
  if (gcd(min_poly, min_poly.derivative()).degree() > 0) {
    throw GeometryError(GeometryErrorKind::InvalidField, "minimal polynomial has a repeated factor");
  }
  const auto roots = rational_roots(min_poly);
  if (!roots.empty()) {
    throw GeometryError(GeometryErrorKind::InvalidField,
                        "minimal polynomial " + min_poly.to_string() + " has the rational root " + harbourne::to_string(roots.front()));
  }
  return std::make_shared<NumberField>(Token{}, min_poly);
}

std::string NumberField::to_string() const {
  if (is_rational()) return "Q";
  return "Q[a]/(" + modulus_.to_string("a") + ")";
}

bool same_field(const NumberField& a, const NumberField& b) noexcept {
  return &a == &b || a.modulus() == b.modulus();
}

namespace {

QPoly reduce(const QPoly& value, const QPoly& modulus) {
  if (value.degree() < modulus.degree()) return value;
  return QPoly::divmod(value, modulus).second;
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, const QPoly& value)
    : field_(std::move(field)), value_(reduce(value, field_->modulus())) {}

FieldElement FieldElement::zero(const FieldPtr& field) { return FieldElement(field, QPoly{}); }

FieldElement FieldElement::one(const FieldPtr& field) { return from_rational(field, Rational(1)); }

FieldElement FieldElement::from_rational(const FieldPtr& field, const Rational& q) {
  return FieldElement(field, QPoly::constant(q));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  return FieldElement(field, QPoly::monomial(Rational(1), 1));
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("field element " + to_string() + " is not rational");
  return value_.coeff(0);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(*field_, *o.field_)) {
    throw GeometryError(GeometryErrorKind::FieldMismatch,
                        "elements of " + field_->to_string() + " and " + o.field_->to_string());
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return from_rational(field_, Rational(1 / value_.coeff(0)));
  // Extended Euclid: s * value + t * modulus = 1.
  QPoly r0 = field_->modulus(), r1 = value_;
  QPoly s0, s1 = QPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = QPoly::divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::logic_error("element not invertible: modulus is reducible");
  return FieldElement(field_, Rational(1 / r0.coeff(0)) * s0);
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, Rational(-1) * value_); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  value_ += o.value_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  value_ -= o.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  value_ = reduce(value_ * o.value_, field_->modulus());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  const int n = a.field_->degree();
  for (int i = n - 1; i >= 0; --i) {
    const int c = cmp(a.value_.coeff(i), b.value_.coeff(i));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return harbourne::to_string(value_.coeff(0));
  return "(" + value_.to_string("a") + ")";
}

}  // namespace harbourne
