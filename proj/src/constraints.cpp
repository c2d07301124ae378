#include "harbourne/constraints.hpp"

#include "harbourne/errors.hpp"
#include "harbourne/harbourne_constant.hpp"

namespace harbourne {

Integer QuadraticConstraint::operator()(const Integer& x) const {
  Integer value = Integer(a) * x * x + Integer(b) * x + Integer(c);
  return value;
}

namespace {

void require_lt_hypotheses(const ConfigurationProfile& profile) {
  require_valid(profile);
  if (profile.curve_class().kind() != CurveKind::ConicP2) {
    throw HypothesisError("LT polynomial is defined for conic configurations only");
  }
  if (profile.k() < 3) throw HypothesisError("LT polynomial requires k >= 3");
  if (profile.top_count() != 0) throw HypothesisError("LT polynomial requires t_k = 0");
}

}  // namespace

QuadraticConstraint lt_polynomial(const ConfigurationProfile& profile) {
  require_lt_hypotheses(profile);
  const MomentSet m = moments(profile);
  const std::int64_t k = profile.k();
  return {2 * k + m.f0, 2 * (3 * k - m.f1 + 2 * m.f0), 4 * (m.f0 - profile.count(2))};
}

IntegerCertificate holds_over_integers(const QuadraticConstraint& q) {
  if (q.a <= 0) throw HypothesisError("vertex certificate needs a positive leading coefficient");
  // Convex in x, so the integer minimum sits at floor or ceil of the vertex.
  const Rational vertex(-q.b, 2 * q.a);
  IntegerCertificate cert;
  for (const Integer& x : {floor(vertex), ceil(vertex)}) {
    Integer value = q(x);
    if (value < 0 && (!cert.value || value < *cert.value)) {
      cert.holds = false;
      cert.witness = x;
      cert.value = value;
    }
  }
  return cert;
}

InstantiationResult lt_at_one(const ConfigurationProfile& profile) {
  require_lt_hypotheses(profile);
  const MomentSet m = moments(profile);
  const std::int64_t k = profile.k();
  InstantiationResult out;
  out.lhs = 8 * k - 2 * m.f1 - 4 * profile.count(2) + 9 * m.f0;
  out.holds = out.lhs >= 0;
  return out;
}

HirzebruchResult hirzebruch_one_one(const ConfigurationProfile& profile) {
  require_valid(profile);
  if (profile.curve_class().kind() != CurveKind::OneOneQuadric) {
    throw HypothesisError("Hirzebruch-type inequality is stated for (1,1)-curves on the quadric");
  }
  if (profile.k() < 4) throw HypothesisError("Hirzebruch-type inequality requires k >= 4");
  if (profile.top_count() != 0) throw HypothesisError("Hirzebruch-type inequality requires t_k = 0");

  HirzebruchResult out;
  const std::int64_t k = profile.k();
  out.lhs = 9 + k + profile.count(2) + profile.count(3);
  for (const auto& [r, count] : profile.t()) {
    if (r < 5) continue;
    out.rhs += (r - 4) * count;
    out.statement_rhs += (k - 4) * count;
  }
  out.holds = out.lhs >= out.rhs;
  return out;
}

const char* to_string(ConicCase c) noexcept {
  switch (c) {
    case ConicCase::TK0: return "TK0";
    case ConicCase::TK1Open: return "TK1_open";
    case ConicCase::TK2: return "TK2";
    case ConicCase::TK3: return "TK3";
    case ConicCase::TK4: return "TK4";
    case ConicCase::NotApplicable: return "NotApplicable";
  }
  return "?";
}

CaseBound classify_conic_case(const ConfigurationProfile& profile) {
  require_valid(profile);
  CaseBound out;
  if (profile.curve_class().kind() != CurveKind::ConicP2) {
    out.provenance = "case analysis covers conic configurations only";
    return out;
  }

  const std::int64_t k = profile.k();
  const MomentSet m = moments(profile);
  switch (profile.top_count()) {
    case 0: {
      out.tag = ConicCase::TK0;
      out.bound = Rational(-9, 2);
      out.provenance = "LT polynomial at x = 1 gives 2(4k - f1) >= -9 f0";
      if (!holds_over_integers(lt_polynomial(profile)).holds) {
        out.provenance += "; this profile violates the LT constraint, so no transversal conic "
                          "configuration realizes it";
      }
      break;
    }
    case 1:
      out.tag = ConicCase::TK1Open;
      out.provenance = "open problem: no bound is known when exactly one point lies on all conics";
      break;
    case 2: {
      out.tag = ConicCase::TK2;
      const std::int64_t numerator = 4 * k - m.f1;
      const std::int64_t g0 = m.f0 - 2;
      if (g0 > 0) {
        Rational printed(-34 + 2 * profile.count(2) + m.f1, g0);
        printed.canonicalize();
        out.printed_tk2_bound = Rational(printed - 8);
      }
      if (numerator >= 0) {
        out.bound = Rational(0);
        out.provenance = "4k - f1 >= 0, so h >= 0 trivially";
      } else if (k < 4) {
        out.provenance = "4k - f1 < 0 but the (1,1)-curve inequality needs k >= 4; no bound";
      } else {
        // h >= (2k - g1)/g0 and g1 <= 9 + k - t2 + 4 g0 on the quadric model.
        Rational chain(k + profile.count(2) - 9, g0);
        chain.canonicalize();
        out.bound = Rational(chain - 4);
        out.provenance = "blow up the two k-fold points, contract their line, apply the (1,1)-curve "
                         "inequality with summand (r-4): h >= (k + t2 - 9)/(f0 - 2) - 4";
      }
      break;
    }
    case 3:
      out.tag = ConicCase::TK3;
      out.bound = Rational(-9, 2);
      out.strict = true;
      out.provenance = "Cremona to lines + linear bound -4: h = (k - F1)/(F0 + 3) > -9/2";
      break;
    case 4:
      out.tag = ConicCase::TK4;
      out.bound = Rational(0);
      out.provenance = "pencil through four points: h = 0";
      if (local_h(profile).h != 0) throw std::logic_error("pencil profile with nonzero Harbourne constant");
      break;
    default:
      throw std::logic_error("validated conic profile with t_k > 4");
  }
  return out;
}

}  // namespace harbourne
