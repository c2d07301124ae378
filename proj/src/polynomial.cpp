#include "harbourne/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "numeric_roots.hpp"

namespace harbourne {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& QPoly::lead() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / lead();
  return inv * *this;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const Rational& c, const QPoly& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> rem(a.coeffs_);
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = 1 / b.lead();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational q = rem[static_cast<std::size_t>(i + b.degree())] * inv_lead;
    quot[static_cast<std::size_t>(i)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      rem[static_cast<std::size_t>(i + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

std::string QPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational mag = abs(c);
    if (mag != 1 || i == 0) os << harbourne::to_string(mag);
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = QPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<Rational> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  if (p.degree() < 1) return {};

  // Squarefree part with integer coefficients.
  QPoly sf = QPoly::divmod(p, gcd(p, p.derivative())).first;
  Integer den_lcm = 1;
  for (const auto& c : sf.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  sf = Rational(den_lcm) * sf;
  const Integer lead = sf.lead().get_num();

  std::vector<Rational> roots;
  if (sf.degree() == 1) {
    roots.push_back(Rational(-sf.coeff(0) / sf.coeff(1)));
  } else {
    std::vector<detail::Complex> c;
    for (const auto& x : sf.coeffs()) c.emplace_back(detail::to_real(x));
    // A rational root p/q has q | lead, so lead * root is an integer.
    const detail::Real lead_real = detail::to_real(Rational(lead));
    for (const auto& z : detail::polynomial_roots(c)) {
      const detail::Real re = z.real();
      const detail::Real im = z.imag();
      const detail::Real scale = std::max<detail::Real>(detail::Real(1), boost::multiprecision::abs(re));
      if (boost::multiprecision::abs(im) > scale * detail::Real("1e-20")) continue;
      const Integer n = detail::floor_to_integer(re * lead_real + detail::Real(0.5));
      Rational candidate(n, lead);
      candidate.canonicalize();
      if (sf(candidate) == 0) roots.push_back(candidate);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace harbourne
