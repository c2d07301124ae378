#include "harbourne/field_roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "harbourne/errors.hpp"
#include "numeric_roots.hpp"

namespace harbourne {

namespace mp = boost::multiprecision;

FieldPoly::FieldPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

void FieldPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const FieldElement& FieldPoly::lead() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FieldElement FieldPoly::operator()(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FieldPoly FieldPoly::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(coeffs_[i] * FieldElement::from_rational(field_, Rational(static_cast<long>(i))));
  }
  return FieldPoly(field_, std::move(d));
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  const FieldElement inv = lead().inverse();
  std::vector<FieldElement> out(coeffs_);
  for (auto& c : out) c *= inv;
  return FieldPoly(field_, std::move(out));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return FieldPoly(a.field_, std::move(out));
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divmod(const FieldPoly& a, const FieldPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& f = a.field_;
  if (a.degree() < b.degree()) return {FieldPoly(f, {}), a};
  std::vector<FieldElement> rem(a.coeffs_);
  std::vector<FieldElement> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, FieldElement::zero(f));
  const FieldElement inv_lead = b.lead().inverse();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const FieldElement q = rem[static_cast<std::size_t>(i + b.degree())] * inv_lead;
    quot[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      rem[static_cast<std::size_t>(i + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {FieldPoly(f, std::move(quot)), FieldPoly(f, std::move(rem))};
}

FieldPoly gcd(FieldPoly a, FieldPoly b) {
  while (!b.is_zero()) {
    auto r = FieldPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<FieldPoly, int>> squarefree_decomposition(const FieldPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<FieldPoly, int>> out;
  if (p.degree() < 1) return out;
  const FieldPoly dp = p.derivative();
  FieldPoly a = gcd(p, dp);
  FieldPoly b = FieldPoly::divmod(p, a).first;
  FieldPoly c = FieldPoly::divmod(dp, a).first;
  FieldPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    FieldPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = FieldPoly::divmod(b, g).first;
    c = FieldPoly::divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

detail::Complex embed(const FieldElement& x, const detail::Complex& root) {
  detail::Complex acc(0);
  const auto& c = x.value().coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * root + detail::Complex(detail::to_real(*it));
  return acc;
}

std::vector<FieldElement> rational_field_roots(const FieldPoly& q) {
  std::vector<Rational> c;
  for (const auto& x : q.coeffs()) c.push_back(x.rational_value());
  std::vector<FieldElement> out;
  for (const auto& r : rational_roots(QPoly(std::move(c)))) out.push_back(FieldElement::from_rational(q.field(), r));
  return out;
}

std::vector<FieldElement> extension_roots(const FieldPoly& q) {
  const auto& field = q.field();
  const auto& table = field->embeddings();
  const std::size_t n = table.roots.size();
  const std::size_t e = static_cast<std::size_t>(q.degree());

  std::vector<std::vector<detail::Complex>> conj_roots(n);
  double combos = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<detail::Complex> c;
    for (const auto& x : q.coeffs()) c.push_back(embed(x, table.roots[j]));
    conj_roots[j] = detail::polynomial_roots(c);
    combos *= static_cast<double>(e);
  }
  if (combos > 2e6) {
    throw ComputationError("root search over " + field->to_string() + " for a degree-" + std::to_string(e) +
                           " polynomial exceeds the candidate budget");
  }

  const Integer max_den("1000000000000000000000000000000", 10);
  const detail::Real im_tol("1e-25");
  const detail::Real fit_tol("1e-28");

  std::vector<FieldElement> found;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    // Coordinates of the element whose j-th conjugate is conj_roots[j][pick[j]].
    std::vector<Rational> coords;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      detail::Complex ci(0);
      for (std::size_t j = 0; j < n; ++j) ci += table.vandermonde_inverse[i][j] * conj_roots[j][pick[j]];
      const detail::Real scale = std::max<detail::Real>(detail::Real(1), detail::Real(mp::abs(ci)));
      if (mp::abs(ci.imag()) > im_tol * scale) {
        ok = false;
        break;
      }
      auto r = detail::reconstruct_rational(ci.real(), max_den, fit_tol * scale);
      if (!r) {
        ok = false;
        break;
      }
      coords.push_back(*r);
    }
    if (ok) {
      FieldElement candidate(field, QPoly(std::move(coords)));
      if (q(candidate).is_zero() &&
          std::find(found.begin(), found.end(), candidate) == found.end()) {
        found.push_back(candidate);
      }
    }
    std::size_t pos = 0;
    while (pos < n && ++pick[pos] == e) pick[pos++] = 0;
    if (pos == n) break;
  }
  return found;
}

}  // namespace

std::vector<FieldRoot> roots_in_field(const FieldPoly& p) {
  std::vector<FieldRoot> out;
  for (const auto& [q, mult] : squarefree_decomposition(p)) {
    std::vector<FieldElement> roots;
    if (q.degree() == 1) {
      roots.push_back(-(q.coeffs()[0] / q.coeffs()[1]));
    } else if (q.field()->is_rational()) {
      roots = rational_field_roots(q);
    } else {
      roots = extension_roots(q);
    }
    for (auto& r : roots) out.push_back({std::move(r), mult});
  }
  std::sort(out.begin(), out.end(), [](const FieldRoot& a, const FieldRoot& b) { return a.value < b.value; });
  return out;
}

}  // namespace harbourne
