#pragma once

#include <utility>
#include <vector>

#include "harbourne/number_field.hpp"

namespace harbourne {

/// Univariate polynomial with coefficients in a NumberField, low degree first.
class FieldPoly {
 public:
  FieldPoly(FieldPtr field, std::vector<FieldElement> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  const FieldElement& lead() const;

  FieldElement operator()(const FieldElement& x) const;
  FieldPoly derivative() const;
  FieldPoly monic() const;

  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  static std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);

 private:
  void trim();

  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

FieldPoly gcd(FieldPoly a, FieldPoly b);

/// Squarefree decomposition p = c * prod_i q_i^i (Yun). Returns the pairs
/// (q_i, i) with q_i of positive degree.
std::vector<std::pair<FieldPoly, int>> squarefree_decomposition(const FieldPoly& p);

struct FieldRoot {
  FieldElement value;
  int multiplicity;
};

/// All roots of p that lie in its coefficient field, with multiplicity.
///
/// Candidates come from high-precision complex embeddings and every reported
/// root is verified exactly; a root whose coordinates need denominators
/// beyond 10^30 can be missed, never invented.
std::vector<FieldRoot> roots_in_field(const FieldPoly& p);

}  // namespace harbourne
