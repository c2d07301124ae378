#include "numeric_roots.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace harbourne::detail {

namespace mp = boost::multiprecision;

Real to_real(const Rational& q) {
  Real num(q.get_num().get_str());
  Real den(q.get_den().get_str());
  return num / den;
}

Integer floor_to_integer(const Real& x) {
  mp::cpp_int i = static_cast<mp::cpp_int>(mp::floor(x));
  return Integer(i.str(), 10);
}

namespace {

Complex evaluate(const std::vector<Complex>& c, const Complex& z) {
  Complex acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Real(static_cast<long>(i)));
  return d;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  if (coeffs.size() < 2) return {};
  const std::size_t n = coeffs.size() - 1;
  std::vector<Complex> c(coeffs);
  const Complex lead = c.back();
  if (mp::abs(lead) == 0) throw std::invalid_argument("polynomial_roots: zero leading coefficient");
  for (auto& x : c) x /= lead;
  if (n == 1) return {-c[0]};

  const auto dc = derivative(c);

  // Cauchy bound on the root moduli.
  Real radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max<Real>(radius, Real(mp::abs(c[i])));
  radius += 1;

  const Real pi = boost::math::constants::pi<Real>();
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = 2 * pi * Real(static_cast<long>(k)) / Real(static_cast<long>(n)) + Real(0.4);
    z[k] = Complex(radius * mp::cos(angle) / 2, radius * mp::sin(angle) / 2);
  }

  // Aberth-Ehrlich iteration.
  const Real eps("1e-46");
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex pk = evaluate(c, z[k]);
      const Complex dk = evaluate(dc, z[k]);
      if (mp::abs(pk) == 0) continue;
      const Complex ratio = pk / dk;
      Complex sum(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      }
      const Complex step = ratio / (Complex(1) - ratio * sum);
      z[k] -= step;
      const Real scale = std::max<Real>(Real(1), Real(mp::abs(z[k])));
      worst = std::max<Real>(worst, Real(mp::abs(step) / scale));
    }
    if (worst < eps) break;
  }
  return z;
}

EmbeddingTable make_embedding_table(const std::vector<Rational>& modulus) {
  EmbeddingTable table;
  std::vector<Complex> c;
  for (const auto& q : modulus) c.emplace_back(to_real(q));
  table.roots = polynomial_roots(c);
  const std::size_t n = table.roots.size();

  // Gauss-Jordan on [V | I].
  std::vector<std::vector<Complex>> a(n, std::vector<Complex>(2 * n));
  for (std::size_t j = 0; j < n; ++j) {
    Complex power(1);
    for (std::size_t i = 0; i < n; ++i) {
      a[j][i] = power;
      power *= table.roots[j];
    }
    a[j][n + j] = Complex(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (mp::abs(a[row][col]) > mp::abs(a[pivot][col])) pivot = row;
    }
    std::swap(a[col], a[pivot]);
    const Complex inv = Complex(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const Complex f = a[row][col];
      if (mp::abs(f) == 0) continue;
      for (std::size_t k = col; k < 2 * n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  table.vandermonde_inverse.assign(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table.vandermonde_inverse[i][j] = a[i][n + j];
  }
  return table;
}

std::optional<Rational> reconstruct_rational(const Real& x, const Integer& max_den, const Real& tol) {
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real rest = x;
  for (int i = 0; i < 256; ++i) {
    const Integer a = floor_to_integer(rest);
    const Integer h = a * h1 + h0;
    const Integer k = a * k1 + k0;
    if (k > max_den) return std::nullopt;
    Rational candidate(h, k);
    candidate.canonicalize();
    if (mp::abs(x - to_real(candidate)) <= tol) return candidate;
    const Real frac = rest - to_real(Rational(a));
    if (frac == 0) return std::nullopt;
    rest = 1 / frac;
    h0 = h1;
    h1 = h;
    k0 = k1;
    k1 = k;
  }
  return std::nullopt;
}

}  // namespace harbourne::detail
