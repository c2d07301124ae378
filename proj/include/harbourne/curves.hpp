#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "harbourne/number_field.hpp"

namespace harbourne {

/// Point of P^2 over a NumberField. Stored in canonical form: the first
/// nonzero coordinate is 1, so projective equality is plain equality.
class ProjPoint {
 public:
  /// Throws GeometryError(InvalidPoint) for the zero vector.
  explicit ProjPoint(std::array<FieldElement, 3> coords);
  static ProjPoint rational(const FieldPtr& field, const Rational& x, const Rational& y, const Rational& z);

  const std::array<FieldElement, 3>& coords() const noexcept { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  const FieldPtr& field() const noexcept { return coords_[0].field(); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

  std::string to_string() const;

 private:
  std::array<FieldElement, 3> coords_;
};

using Monomial = std::array<int, 3>;

/// Homogeneous polynomial in X, Y, Z with nonzero coefficients only.
class TernaryForm {
 public:
  TernaryForm(FieldPtr field, int degree);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  const std::map<Monomial, FieldElement>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  FieldElement coeff(const Monomial& m) const;
  void add(const Monomial& m, const FieldElement& c);

  FieldElement operator()(const std::array<FieldElement, 3>& p) const;
  /// Partial derivatives at p.
  std::array<FieldElement, 3> gradient(const std::array<FieldElement, 3>& p) const;

 private:
  FieldPtr field_;
  int degree_;
  std::map<Monomial, FieldElement> terms_;
};

/// A line aX + bY + cZ or a conic aX^2 + bY^2 + cZ^2 + dXY + eXZ + fYZ.
///
/// Coefficient vectors are stored up to scaling (first nonzero entry 1).
/// Conics must be irreducible: the symmetric matrix has nonzero determinant.
class PlaneCurve {
 public:
  enum class Kind { Line, Conic };

  /// Throws GeometryError(InvalidCurve) for a zero vector or wrong arity,
  /// GeometryError(ReducibleCurve) for a singular conic.
  static PlaneCurve line(std::array<FieldElement, 3> coeffs);
  static PlaneCurve conic(std::array<FieldElement, 6> coeffs);
  static PlaneCurve line(const FieldPtr& field, const Rational& a, const Rational& b, const Rational& c);
  static PlaneCurve conic(const FieldPtr& field, const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d, const Rational& e, const Rational& f);
  /// Degree 1 or 2 forms only.
  static PlaneCurve from_form(const TernaryForm& form);

  Kind kind() const noexcept { return kind_; }
  int degree() const noexcept { return kind_ == Kind::Line ? 1 : 2; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  const FieldPtr& field() const noexcept { return coeffs_[0].field(); }

  TernaryForm form() const;
  FieldElement evaluate(const ProjPoint& p) const;
  std::array<FieldElement, 3> gradient(const ProjPoint& p) const;

  /// Multiplicity at p: 0 off the curve, otherwise the order of vanishing.
  int multiplicity_at(const ProjPoint& p) const;

  friend bool operator==(const PlaneCurve&, const PlaneCurve&) = default;

  std::string to_string() const;

 private:
  PlaneCurve(Kind kind, std::vector<FieldElement> coeffs);

  Kind kind_;
  std::vector<FieldElement> coeffs_;
};

bool incident(const PlaneCurve& curve, const ProjPoint& p);

struct IntersectionPoint {
  ProjPoint point;
  int multiplicity;
};

/// Intersection of two distinct curves, points sorted. Throws
/// GeometryError(IntersectionOutsideField) when the in-field multiplicities
/// fall short of the Bezout number, GeometryError(ProportionalCurves) for
/// equal curves.
std::vector<IntersectionPoint> intersect(const PlaneCurve& c1, const PlaneCurve& c2);

/// Both curves smooth at p with independent gradients. Throws
/// GeometryError(NotOnCurve) when p is not on both.
bool transversal_at(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPoint& p);

/// (x:y:z) -> (yz:xz:xy). Throws GeometryError(BasePoint) on a vertex of
/// the coordinate triangle.
ProjPoint cremona_map_point(const ProjPoint& p);

/// Image of a line or conic under the standard Cremona map with the
/// exceptional factors X^a Y^b Z^c removed. Throws DegreeOutOfRange when the
/// image has degree above 2, ContractedCurve for a coordinate line.
PlaneCurve cremona_map_curve(const PlaneCurve& c);

/// Substitutes (YZ, XZ, XY) into a form without removing any factor.
TernaryForm cremona_substitute(const TernaryForm& f);

/// Bidegree-(1,1) form sum m[i][j] u_i v_j on P^1 x P^1.
struct OneOneForm {
  std::array<std::array<FieldElement, 2>, 2> m;

  FieldElement operator()(const std::array<FieldElement, 2>& u, const std::array<FieldElement, 2>& v) const;
  FieldElement determinant() const;
};

/// Image of a conic through (1:0:0) and (0:1:0) on P^1 x P^1, with
/// coordinates u = (y:z) (projection from (1:0:0)) and v = (x:z) (projection
/// from (0:1:0)). Throws NotOnCurve when a base point is missed.
OneOneForm to_quadric_curve(const PlaneCurve& conic);

/// The same two projections applied to a point other than the two base
/// points.
std::pair<std::array<FieldElement, 2>, std::array<FieldElement, 2>> to_quadric_point(const ProjPoint& p);

/// x -> A x on P^2.
class Projectivity {
 public:
  using Matrix = std::array<std::array<FieldElement, 3>, 3>;

  /// Throws GeometryError(InvalidPoint) for a singular matrix.
  explicit Projectivity(Matrix a);

  /// The map sending p1, p2, p3 to (1:0:0), (0:1:0), (0:0:1). Throws when
  /// the points are collinear.
  static Projectivity to_coordinate_triangle(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

  const Matrix& matrix() const noexcept { return a_; }
  Projectivity inverse() const;

  ProjPoint apply(const ProjPoint& p) const;
  /// Image curve {A x : x in C}, i.e. F(A^-1 y) = 0.
  PlaneCurve apply(const PlaneCurve& c) const;

 private:
  Matrix a_;
};

}  // namespace harbourne
