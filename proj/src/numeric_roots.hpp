#pragma once

// High-precision floating point used only to propose candidates for exact
// roots. Every candidate is verified in exact arithmetic by the caller.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <optional>
#include <vector>

#include "harbourne/rational.hpp"

namespace harbourne::detail {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

Real to_real(const Rational& q);

/// Complex embeddings of a number field: the roots a_j of its modulus and the
/// inverse of the Vandermonde matrix V[j][i] = a_j^i, which recovers the
/// coordinates of an element from its conjugates.
struct EmbeddingTable {
  std::vector<Complex> roots;
  std::vector<std::vector<Complex>> vandermonde_inverse;
};

EmbeddingTable make_embedding_table(const std::vector<Rational>& modulus);

/// All complex roots of a polynomial with simple roots. Coefficients low
/// degree first, leading coefficient nonzero.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// Continued-fraction reconstruction: the first convergent p/q with
/// q <= max_den and |x - p/q| <= tol, if any.
std::optional<Rational> reconstruct_rational(const Real& x, const Integer& max_den, const Real& tol);

Integer floor_to_integer(const Real& x);

}  // namespace harbourne::detail
