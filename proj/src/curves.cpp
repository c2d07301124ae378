#include "harbourne/curves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "harbourne/errors.hpp"
#include "harbourne/field_roots.hpp"

namespace harbourne {

namespace {

using Vec3 = std::array<FieldElement, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool all_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 unit(const FieldPtr& f, std::size_t i) {
  Vec3 v{FieldElement::zero(f), FieldElement::zero(f), FieldElement::zero(f)};
  v[i] = FieldElement::one(f);
  return v;
}

Vec3 combine(const FieldElement& s, const Vec3& p, const FieldElement& t, const Vec3& q) {
  return {s * p[0] + t * q[0], s * p[1] + t * q[1], s * p[2] + t * q[2]};
}

FieldElement power(const FieldElement& x, int n) {
  FieldElement acc = FieldElement::one(x.field());
  for (int i = 0; i < n; ++i) acc *= x;
  return acc;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(*a, *b)) {
    throw GeometryError(GeometryErrorKind::FieldMismatch, a->to_string() + " vs " + b->to_string());
  }
}

}  // namespace

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(std::array<FieldElement, 3> coords) : coords_(std::move(coords)) {
  require_same_field(coords_[0].field(), coords_[1].field());
  require_same_field(coords_[0].field(), coords_[2].field());
  std::size_t lead = 0;
  while (lead < 3 && coords_[lead].is_zero()) ++lead;
  if (lead == 3) throw GeometryError(GeometryErrorKind::InvalidPoint, "all coordinates are zero");
  const FieldElement inv = coords_[lead].inverse();
  for (auto& c : coords_) c *= inv;
}

ProjPoint ProjPoint::rational(const FieldPtr& field, const Rational& x, const Rational& y, const Rational& z) {
  return ProjPoint({FieldElement::from_rational(field, x), FieldElement::from_rational(field, y),
                    FieldElement::from_rational(field, z)});
}

std::string ProjPoint::to_string() const {
  return "(" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() + ")";
}

// ---------------------------------------------------------------- TernaryForm

TernaryForm::TernaryForm(FieldPtr field, int degree) : field_(std::move(field)), degree_(degree) {}

FieldElement TernaryForm::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void TernaryForm::add(const Monomial& m, const FieldElement& c) {
  if (m[0] + m[1] + m[2] != degree_ || m[0] < 0 || m[1] < 0 || m[2] < 0) {
    throw std::invalid_argument("monomial of wrong degree");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement TernaryForm::operator()(const Vec3& p) const {
  FieldElement acc = FieldElement::zero(field_);
  for (const auto& [m, c] : terms_) acc += c * power(p[0], m[0]) * power(p[1], m[1]) * power(p[2], m[2]);
  return acc;
}

Vec3 TernaryForm::gradient(const Vec3& p) const {
  Vec3 g{FieldElement::zero(field_), FieldElement::zero(field_), FieldElement::zero(field_)};
  for (const auto& [m, c] : terms_) {
    for (std::size_t v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      FieldElement term = c * FieldElement::from_rational(field_, Rational(m[v]));
      for (std::size_t w = 0; w < 3; ++w) term *= power(p[w], m[w] - (w == v ? 1 : 0));
      g[v] += term;
    }
  }
  return g;
}

namespace {

TernaryForm multiply(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm out(a.field(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  }
  return out;
}

TernaryForm linear_form(const Vec3& coeffs) {
  TernaryForm f(coeffs[0].field(), 1);
  f.add({1, 0, 0}, coeffs[0]);
  f.add({0, 1, 0}, coeffs[1]);
  f.add({0, 0, 1}, coeffs[2]);
  return f;
}

// F(L0, L1, L2) for linear forms L_i.
TernaryForm substitute_linear(const TernaryForm& f, const std::array<Vec3, 3>& linear) {
  TernaryForm out(f.field(), f.degree());
  for (const auto& [m, c] : f.terms()) {
    TernaryForm term(f.field(), 0);
    term.add({0, 0, 0}, c);
    for (std::size_t v = 0; v < 3; ++v) {
      for (int e = 0; e < m[v]; ++e) term = multiply(term, linear_form(linear[v]));
    }
    for (const auto& [mt, ct] : term.terms()) out.add(mt, ct);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PlaneCurve

namespace {

constexpr std::array<Monomial, 3> kLineMonomials{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
constexpr std::array<Monomial, 6> kConicMonomials{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};

// Determinant of twice the symmetric matrix of a conic.
FieldElement conic_discriminant(const std::vector<FieldElement>& q) {
  const FieldPtr& f = q[0].field();
  const FieldElement two = FieldElement::from_rational(f, Rational(2));
  const FieldElement a = two * q[0], b = two * q[1], c = two * q[2];
  const FieldElement &d = q[3], &e = q[4], &g = q[5];
  return a * (b * c - g * g) - d * (d * c - g * e) + e * (d * g - b * e);
}

}  // namespace

PlaneCurve::PlaneCurve(Kind kind, std::vector<FieldElement> coeffs) : kind_(kind), coeffs_(std::move(coeffs)) {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) require_same_field(coeffs_[0].field(), coeffs_[i].field());
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) throw GeometryError(GeometryErrorKind::InvalidCurve, "all coefficients are zero");
  const FieldElement inv = coeffs_[lead].inverse();
  for (auto& c : coeffs_) c *= inv;
  if (kind_ == Kind::Conic && conic_discriminant(coeffs_).is_zero()) {
    throw GeometryError(GeometryErrorKind::ReducibleCurve, "conic " + to_string() + " is reducible");
  }
}

PlaneCurve PlaneCurve::line(std::array<FieldElement, 3> coeffs) {
  return PlaneCurve(Kind::Line, std::vector<FieldElement>(coeffs.begin(), coeffs.end()));
}

PlaneCurve PlaneCurve::conic(std::array<FieldElement, 6> coeffs) {
  return PlaneCurve(Kind::Conic, std::vector<FieldElement>(coeffs.begin(), coeffs.end()));
}

PlaneCurve PlaneCurve::line(const FieldPtr& field, const Rational& a, const Rational& b, const Rational& c) {
  auto e = [&](const Rational& q) { return FieldElement::from_rational(field, q); };
  return line({e(a), e(b), e(c)});
}

PlaneCurve PlaneCurve::conic(const FieldPtr& field, const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d, const Rational& e, const Rational& f) {
  auto el = [&](const Rational& q) { return FieldElement::from_rational(field, q); };
  return conic({el(a), el(b), el(c), el(d), el(e), el(f)});
}

PlaneCurve PlaneCurve::from_form(const TernaryForm& form) {
  if (form.degree() == 1) {
    return line({form.coeff(kLineMonomials[0]), form.coeff(kLineMonomials[1]), form.coeff(kLineMonomials[2])});
  }
  if (form.degree() == 2) {
    std::array<FieldElement, 6> c{form.coeff(kConicMonomials[0]), form.coeff(kConicMonomials[1]),
                                  form.coeff(kConicMonomials[2]), form.coeff(kConicMonomials[3]),
                                  form.coeff(kConicMonomials[4]), form.coeff(kConicMonomials[5])};
    return conic(std::move(c));
  }
  throw GeometryError(GeometryErrorKind::DegreeOutOfRange,
                      "degree " + std::to_string(form.degree()) + " curves are not supported");
}

TernaryForm PlaneCurve::form() const {
  TernaryForm f(field(), degree());
  if (kind_ == Kind::Line) {
    for (std::size_t i = 0; i < 3; ++i) f.add(kLineMonomials[i], coeffs_[i]);
  } else {
    for (std::size_t i = 0; i < 6; ++i) f.add(kConicMonomials[i], coeffs_[i]);
  }
  return f;
}

FieldElement PlaneCurve::evaluate(const ProjPoint& p) const {
  require_same_field(field(), p.field());
  return form()(p.coords());
}

Vec3 PlaneCurve::gradient(const ProjPoint& p) const {
  require_same_field(field(), p.field());
  return form().gradient(p.coords());
}

int PlaneCurve::multiplicity_at(const ProjPoint& p) const {
  if (!evaluate(p).is_zero()) return 0;
  if (!all_zero(gradient(p))) return 1;
  return 2;  // irreducible conics are smooth, so only reachable for forms built elsewhere
}

std::string PlaneCurve::to_string() const {
  static const char* line_names[] = {"X", "Y", "Z"};
  static const char* conic_names[] = {"X^2", "Y^2", "Z^2", "XY", "XZ", "YZ"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[i].to_string() << "*" << (kind_ == Kind::Line ? line_names[i] : conic_names[i]);
    first = false;
  }
  return os.str();
}

bool incident(const PlaneCurve& curve, const ProjPoint& p) { return curve.evaluate(p).is_zero(); }

// ---------------------------------------------------------------- intersection

namespace {

// Binary form sum c[i] x^i y^(d-i).
using BinaryForm = std::vector<FieldElement>;

BinaryForm mul(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.size() + b.size() - 1, FieldElement::zero(a[0].field()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

BinaryForm sub(const BinaryForm& a, const BinaryForm& b) {
  if (a.size() != b.size()) throw std::logic_error("binary forms of different degree");
  BinaryForm out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

struct BinaryRoot {
  FieldElement x;
  FieldElement y;
  int multiplicity;
};

// In-field roots (x:y) of a nonzero binary form.
std::vector<BinaryRoot> binary_roots(const BinaryForm& form) {
  const FieldPtr& f = form[0].field();
  const int d = static_cast<int>(form.size()) - 1;
  FieldPoly affine(f, form);  // y = 1
  if (affine.is_zero()) throw std::logic_error("binary_roots of the zero form");
  std::vector<BinaryRoot> out;
  if (affine.degree() < d) out.push_back({FieldElement::one(f), FieldElement::zero(f), d - affine.degree()});
  for (auto& r : roots_in_field(affine)) out.push_back({std::move(r.value), FieldElement::one(f), r.multiplicity});
  return out;
}

// Two points spanning a line.
std::pair<Vec3, Vec3> line_basis(const PlaneCurve& line) {
  const auto& l = line.coeffs();
  const FieldPtr& f = line.field();
  std::size_t i = 0;
  while (l[i].is_zero()) ++i;
  const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
  Vec3 p0 = unit(f, j), p1 = unit(f, k);
  p0[j] = l[i];
  p0[i] = -l[j];
  p1[k] = l[i];
  p1[i] = -l[k];
  return {p0, p1};
}

// Q(p + q) - Q(p) - Q(q).
FieldElement polar(const TernaryForm& q, const Vec3& p, const Vec3& r) {
  Vec3 sum{p[0] + r[0], p[1] + r[1], p[2] + r[2]};
  return q(sum) - q(p) - q(r);
}

std::vector<IntersectionPoint> intersect_lines(const PlaneCurve& a, const PlaneCurve& b) {
  Vec3 la{a.coeffs()[0], a.coeffs()[1], a.coeffs()[2]};
  Vec3 lb{b.coeffs()[0], b.coeffs()[1], b.coeffs()[2]};
  return {{ProjPoint(cross(la, lb)), 1}};
}

std::vector<IntersectionPoint> intersect_line_conic(const PlaneCurve& line, const PlaneCurve& conic) {
  const auto [p0, p1] = line_basis(line);
  const TernaryForm q = conic.form();
  // Q(x p0 + y p1) = x^2 Q(p0) + x y B(p0, p1) + y^2 Q(p1).
  BinaryForm restricted{q(p1), polar(q, p0, p1), q(p0)};
  std::vector<IntersectionPoint> out;
  for (const auto& root : binary_roots(restricted)) {
    out.push_back({ProjPoint(combine(root.x, p0, root.y, p1)), root.multiplicity});
  }
  return out;
}

// Restriction of a conic to the points x U + y V + z O, as a quadratic in z
// whose coefficients are binary forms in (x, y).
struct PencilRestriction {
  FieldElement z2;
  BinaryForm z1;
  BinaryForm z0;
};

PencilRestriction restrict_to_center(const TernaryForm& q, const Vec3& u, const Vec3& v, const Vec3& o) {
  return {q(o), {polar(q, v, o), polar(q, u, o)}, {q(v), polar(q, u, v), q(u)}};
}

FieldElement eval_binary(const BinaryForm& f, const FieldElement& x, const FieldElement& y) {
  const int d = static_cast<int>(f.size()) - 1;
  FieldElement acc = FieldElement::zero(x.field());
  for (int i = 0; i <= d; ++i) acc += f[static_cast<std::size_t>(i)] * power(x, i) * power(y, d - i);
  return acc;
}

std::vector<Vec3> candidate_centers(const FieldPtr& f) {
  std::vector<Vec3> out;
  auto add = [&](long x, long y, long z) {
    out.push_back({FieldElement::from_rational(f, Rational(x)), FieldElement::from_rational(f, Rational(y)),
                   FieldElement::from_rational(f, Rational(z))});
  };
  add(0, 0, 1);
  add(1, 0, 0);
  add(0, 1, 0);
  add(1, 1, 1);
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < 200; ++i) {
    long c[3];
    for (auto& x : c) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      x = static_cast<long>((state >> 33) % 41) - 20;
    }
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    add(c[0], c[1], c[2]);
  }
  return out;
}

std::vector<IntersectionPoint> intersect_conics(const PlaneCurve& a, const PlaneCurve& b) {
  const FieldPtr& f = a.field();
  const TernaryForm qa = a.form(), qb = b.form();

  for (const Vec3& o : candidate_centers(f)) {
    if (qa(o).is_zero() || qb(o).is_zero()) continue;
    std::size_t m = 0;
    while (o[m].is_zero()) ++m;
    const Vec3 u = unit(f, (m + 1) % 3), v = unit(f, (m + 2) % 3);

    const auto ra = restrict_to_center(qa, u, v, o);
    const auto rb = restrict_to_center(qb, u, v, o);
    const BinaryForm a2{ra.z2}, b2{rb.z2};
    // Resultant in z of two quadratics with constant leading coefficients.
    const BinaryForm p = sub(mul(a2, rb.z0), mul(b2, ra.z0));
    const BinaryForm q = sub(mul(a2, rb.z1), mul(b2, ra.z1));
    const BinaryForm r = sub(mul(ra.z1, rb.z0), mul(ra.z0, rb.z1));
    const BinaryForm res = sub(mul(p, p), mul(q, r));
    if (std::all_of(res.begin(), res.end(), [](const FieldElement& c) { return c.is_zero(); })) {
      throw std::logic_error("distinct irreducible conics share a component");
    }

    std::vector<IntersectionPoint> out;
    bool retry = false;
    for (const auto& root : binary_roots(res)) {
      auto along = [&](const PencilRestriction& rr) {
        return FieldPoly(f, {eval_binary(rr.z0, root.x, root.y), eval_binary(rr.z1, root.x, root.y), rr.z2});
      };
      const FieldPoly common = gcd(along(ra), along(rb));
      if (common.degree() == 2) {
        retry = true;  // two common points on one line through the center
        break;
      }
      if (common.degree() != 1) throw std::logic_error("resultant root without a common point");
      const FieldElement z = -(common.coeffs()[0] / common.coeffs()[1]);
      const Vec3 base = combine(root.x, u, root.y, v);
      out.push_back({ProjPoint(combine(FieldElement::one(f), base, z, o)), root.multiplicity});
    }
    if (!retry) return out;
  }
  throw std::logic_error("no admissible projection center found");
}

}  // namespace

std::vector<IntersectionPoint> intersect(const PlaneCurve& c1, const PlaneCurve& c2) {
  require_same_field(c1.field(), c2.field());
  if (c1 == c2) throw GeometryError(GeometryErrorKind::ProportionalCurves, c1.to_string());

  std::vector<IntersectionPoint> out;
  if (c1.kind() == PlaneCurve::Kind::Line && c2.kind() == PlaneCurve::Kind::Line) {
    out = intersect_lines(c1, c2);
  } else if (c1.kind() == PlaneCurve::Kind::Line) {
    out = intersect_line_conic(c1, c2);
  } else if (c2.kind() == PlaneCurve::Kind::Line) {
    out = intersect_line_conic(c2, c1);
  } else {
    out = intersect_conics(c1, c2);
  }

  int total = 0;
  for (const auto& ip : out) total += ip.multiplicity;
  const int bezout = c1.degree() * c2.degree();
  if (total < bezout) {
    throw GeometryError(GeometryErrorKind::IntersectionOutsideField,
                        "only " + std::to_string(total) + " of " + std::to_string(bezout) + " intersections of " +
                            c1.to_string() + " and " + c2.to_string() + " lie in " + c1.field()->to_string());
  }
  if (total > bezout) throw std::logic_error("intersection multiplicities exceed Bezout");
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.point < y.point; });
  return out;
}

bool transversal_at(const PlaneCurve& c1, const PlaneCurve& c2, const ProjPoint& p) {
  if (!incident(c1, p) || !incident(c2, p)) {
    throw GeometryError(GeometryErrorKind::NotOnCurve, p.to_string() + " is not on both curves");
  }
  const Vec3 g1 = c1.gradient(p), g2 = c2.gradient(p);
  if (all_zero(g1) || all_zero(g2)) return false;
  return !all_zero(cross(g1, g2));
}

// ---------------------------------------------------------------- Cremona

ProjPoint cremona_map_point(const ProjPoint& p) {
  const auto& c = p.coords();
  Vec3 image{c[1] * c[2], c[0] * c[2], c[0] * c[1]};
  if (all_zero(image)) throw GeometryError(GeometryErrorKind::BasePoint, p.to_string() + " is a base point");
  return ProjPoint(image);
}

TernaryForm cremona_substitute(const TernaryForm& f) {
  TernaryForm out(f.field(), 2 * f.degree());
  for (const auto& [m, c] : f.terms()) out.add({m[1] + m[2], m[0] + m[2], m[0] + m[1]}, c);
  return out;
}

PlaneCurve cremona_map_curve(const PlaneCurve& c) {
  const FieldPtr& f = c.field();
  const TernaryForm sub = cremona_substitute(c.form());
  Monomial low{sub.degree(), sub.degree(), sub.degree()};
  for (const auto& [m, coeff] : sub.terms()) {
    for (std::size_t v = 0; v < 3; ++v) low[v] = std::min(low[v], m[v]);
  }
  // The exceptional exponents are the multiplicities at the base points.
  for (std::size_t v = 0; v < 3; ++v) {
    Vec3 e = unit(f, v);
    if (low[v] != c.multiplicity_at(ProjPoint(e))) {
      throw std::logic_error("Cremona bookkeeping: exceptional exponent differs from base-point multiplicity");
    }
  }
  const int degree = sub.degree() - low[0] - low[1] - low[2];
  if (degree == 0) {
    throw GeometryError(GeometryErrorKind::ContractedCurve, c.to_string() + " is contracted to a point");
  }
  if (degree > 2) {
    throw GeometryError(GeometryErrorKind::DegreeOutOfRange,
                        "image of " + c.to_string() + " has degree " + std::to_string(degree));
  }
  TernaryForm reduced(f, degree);
  for (const auto& [m, coeff] : sub.terms()) reduced.add({m[0] - low[0], m[1] - low[1], m[2] - low[2]}, coeff);
  return PlaneCurve::from_form(reduced);
}

// ---------------------------------------------------------------- quadric

FieldElement OneOneForm::operator()(const std::array<FieldElement, 2>& u, const std::array<FieldElement, 2>& v) const {
  FieldElement acc = FieldElement::zero(u[0].field());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) acc += m[i][j] * u[i] * v[j];
  }
  return acc;
}

FieldElement OneOneForm::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

OneOneForm to_quadric_curve(const PlaneCurve& conic) {
  if (conic.kind() != PlaneCurve::Kind::Conic) {
    throw GeometryError(GeometryErrorKind::InvalidCurve, "only conics correspond to (1,1)-curves");
  }
  const auto& q = conic.coeffs();
  if (!q[0].is_zero() || !q[1].is_zero()) {
    throw GeometryError(GeometryErrorKind::NotOnCurve,
                        conic.to_string() + " does not pass through both (1:0:0) and (0:1:0)");
  }
  // c Z^2 + d XY + e XZ + f YZ  ->  d u0 v0 + f u0 v1 + e u1 v0 + c u1 v1.
  OneOneForm out{{{{q[3], q[5]}, {q[4], q[2]}}}};
  if (out.determinant().is_zero()) throw std::logic_error("irreducible conic with a reducible (1,1) image");
  return out;
}

std::pair<std::array<FieldElement, 2>, std::array<FieldElement, 2>> to_quadric_point(const ProjPoint& p) {
  const auto& c = p.coords();
  if (c[1].is_zero() && c[2].is_zero()) throw GeometryError(GeometryErrorKind::BasePoint, "(1:0:0) has no image");
  if (c[0].is_zero() && c[2].is_zero()) throw GeometryError(GeometryErrorKind::BasePoint, "(0:1:0) has no image");
  return {{c[1], c[2]}, {c[0], c[2]}};
}

// ---------------------------------------------------------------- Projectivity

namespace {

FieldElement det3(const Projectivity::Matrix& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Projectivity::Matrix inverse3(const Projectivity::Matrix& a) {
  const FieldElement det = det3(a);
  if (det.is_zero()) throw GeometryError(GeometryErrorKind::InvalidPoint, "singular projective transformation");
  const FieldElement inv = det.inverse();
  auto cof = [&](std::size_t r, std::size_t c) {
    const std::size_t r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
  };
  Projectivity::Matrix out = a;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out[c][r] = cof(r, c) * inv;
  }
  return out;
}

}  // namespace

Projectivity::Projectivity(Matrix a) : a_(std::move(a)) {
  if (det3(a_).is_zero()) throw GeometryError(GeometryErrorKind::InvalidPoint, "singular projective transformation");
}

Projectivity Projectivity::to_coordinate_triangle(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  Matrix m{{{p1[0], p2[0], p3[0]}, {p1[1], p2[1], p3[1]}, {p1[2], p2[2], p3[2]}}};
  if (det3(m).is_zero()) throw GeometryError(GeometryErrorKind::InvalidPoint, "base points are collinear");
  return Projectivity(inverse3(m));
}

Projectivity Projectivity::inverse() const { return Projectivity(inverse3(a_)); }

ProjPoint Projectivity::apply(const ProjPoint& p) const {
  const auto& x = p.coords();
  Vec3 y{a_[0][0] * x[0] + a_[0][1] * x[1] + a_[0][2] * x[2], a_[1][0] * x[0] + a_[1][1] * x[1] + a_[1][2] * x[2],
         a_[2][0] * x[0] + a_[2][1] * x[1] + a_[2][2] * x[2]};
  return ProjPoint(y);
}

PlaneCurve Projectivity::apply(const PlaneCurve& c) const {
  const Matrix inv = inverse3(a_);
  return PlaneCurve::from_form(substitute_linear(c.form(), {inv[0], inv[1], inv[2]}));
}

}  // namespace harbourne
