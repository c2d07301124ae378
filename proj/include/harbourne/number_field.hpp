#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "harbourne/polynomial.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

namespace detail {
struct EmbeddingTable;
}

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q or Q(a) = Q[x]/(m) for a monic irreducible m.
///
/// Irreducibility is checked for m of degree <= 3 (no rational root) and
/// sanity-checked above that (no rational root, squarefree). Complex
/// embeddings are computed once at construction; they are only ever used to
/// propose candidates that are then verified exactly.
class NumberField {
 public:
  static FieldPtr rationals();
  /// Throws GeometryError(InvalidField).
  static FieldPtr create(const QPoly& min_poly);

  int degree() const noexcept { return modulus_.degree(); }
  bool is_rational() const noexcept { return degree() == 1; }
  const QPoly& modulus() const noexcept { return modulus_; }
  const detail::EmbeddingTable& embeddings() const { return *embeddings_; }

  std::string to_string() const;

  struct Token {};
  NumberField(Token, QPoly modulus);

 private:
  QPoly modulus_;
  std::shared_ptr<const detail::EmbeddingTable> embeddings_;
};

bool same_field(const NumberField& a, const NumberField& b) noexcept;

/// Element of a NumberField: a polynomial in the generator of degree below
/// the field degree. Equality and ordering are coefficient-wise.
class FieldElement {
 public:
  FieldElement(FieldPtr field, const QPoly& value);

  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);
  static FieldElement from_rational(const FieldPtr& field, const Rational& q);
  /// The class of x, i.e. the adjoined root.
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const noexcept { return field_; }
  const QPoly& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_rational() const noexcept { return value_.degree() <= 0; }
  /// Throws std::domain_error when not rational.
  Rational rational_value() const;

  /// Throws std::domain_error on zero.
  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  /// "3/2" for rationals, "(1/2 + 3*a)" style otherwise.
  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  QPoly value_;
};

}  // namespace harbourne
