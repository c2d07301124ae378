// One PASS/FAIL line per acceptance criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "harbourne/configuration.hpp"
#include "harbourne/constraints.hpp"
#include "harbourne/covers.hpp"
#include "harbourne/cremona.hpp"
#include "harbourne/errors.hpp"
#include "harbourne/harbourne_constant.hpp"
#include "harbourne/search.hpp"
#include "oracles.hpp"

using namespace harbourne;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_seconds) {
    out.ok = false;
    out.detail << " [over time limit " << limit_seconds << " s]";
  }
  if (!out.ok) ++failures;
  std::printf("%s %d %s (%.3f s)%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, out.detail.str().c_str());
  std::fflush(stdout);
}

const FieldPtr Q = NumberField::rationals();

PlaneCurve conic(long a, long b, long c, long d, long e, long f) {
  return PlaneCurve::conic(Q, Rational(a), Rational(b), Rational(c), Rational(d), Rational(e), Rational(f));
}

void pipeline(Outcome& out, Multiplicities t, int k, const Rational& h_lines, const Rational& h_conics,
              const std::string& printed_lines, const std::string& printed_conics, int digits) {
  const ConfigurationProfile lines(CurveClass::line(), k, std::move(t));
  const Rational h1 = local_h(lines).h;
  const auto conics = cremona_profile(lines, CremonaMode::GenericPoints);
  const Rational h2 = local_h(conics).h;
  out.expect(h1 == h_lines, "h of lines is " + to_string(h1));
  out.expect(conics.curve_class() == CurveClass::conic(), "image class");
  out.expect(conics.count(k) == 3, "three k-fold points after Cremona");
  out.expect(h2 == h_conics, "h after Cremona is " + to_string(h2));
  if (!printed_lines.empty()) {
    out.expect(round_decimals(h1, 2) == parse_decimal(printed_lines), "rounded h of lines");
  }
  out.expect(round_decimals(h2, digits) == parse_decimal(printed_conics), "rounded h after Cremona");
  out.detail << " h=" << to_string(h1) << " -> " << to_string(h2) << " (" << to_decimal(h2, digits) << ")";
}

std::vector<std::array<Rational, 3>> random_lines(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<std::array<Rational, 3>> out;
  std::vector<PlaneCurve> seen;
  while (static_cast<int>(out.size()) < k) {
    std::array<Rational, 3> l{Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng))};
    if (l[0] == 0 && l[1] == 0 && l[2] == 0) continue;
    const PlaneCurve c = PlaneCurve::line(Q, l[0], l[1], l[2]);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    out.push_back(l);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "Klein pipeline", 1.0, [](Outcome& out) {
    pipeline(out, {{3, 28}, {4, 21}}, 21, Rational(-3), Rational(-147, 52), "", "-2.827", 3);
  });

  criterion(2, "Wiman pipeline", 1.0, [](Outcome& out) {
    pipeline(out, {{3, 120}, {4, 45}, {5, 36}}, 45, Rational(-225, 67), Rational(-225, 68), "-3.36", "-3.31", 2);
  });

  criterion(3, "Cremona transformation law", 10.0, [](Outcome& out) {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto p = oracle::random_profile(rng, CurveClass::line(), 3, 60);
      const HReport before = local_h(p);
      const HReport after = local_h(cremona_profile(p, CremonaMode::GenericPoints));
      const Rational s(before.s);
      out.expect(after.h == s / (s + 3) * before.h, "law on " + std::to_string(i));
      out.expect(after.numerator == before.numerator, "numerator on " + std::to_string(i));
      out.expect(after.s == before.s + 3, "s + 3 on " + std::to_string(i));
      ++checked;
      if (!out.ok) break;
    }
    out.detail << " " << checked << " random line profiles";
  });

  criterion(4, "LT-filtered conic sweep", 120.0, [](Outcome& out) {
    for (int k = 3; k <= 6; ++k) {
      SearchQuery q;
      q.curve_class = CurveClass::conic();
      q.k = k;
      q.require_tk_zero = true;
      q.filters = {SearchFilter::LTPolynomial};
      const SearchResult r = minimize_h(q);
      out.expect(!r.truncated, "complete enumeration");
      out.expect(r.min_h.has_value(), "some profile passes");
      if (!r.min_h) continue;
      out.expect(*r.min_h >= Rational(-9, 2), "h >= -9/2 at k=" + std::to_string(k));
      if (k == 3) out.expect(*r.min_h == -1, "k=3 minimum");
      if (k == 4) out.expect(*r.min_h == Rational(-4, 3), "k=4 minimum");
      out.detail << " k=" << k << ":" << to_string(*r.min_h) << "/" << r.filtered_count;
    }
  });

  criterion(5, "cover margin", 30.0, [](Outcome& out) {
    out.expect(miyaoka_yau_margin(3) == expected_margin_at_three(), "symbolic identity at n=3");
    std::mt19937_64 rng(77);
    int instances = 0;
    for (int i = 0; i < 200; ++i) {
      const auto p = oracle::random_profile(rng, CurveClass::one_one(), 3, 30);
      oracle::CoverData d;
      d.k = p.k();
      d.t2 = p.count(2);
      for (const auto& [r, t] : p.t()) {
        if (r >= 3) d.higher[r] = t;
      }
      const Rational direct = Rational(3) * oracle::euler_from_strata(d, 3) - oracle::canonical_square_direct(d, 3);
      Rational closed = Rational(9 + p.k() + p.count(2));
      for (const auto& [r, t] : d.higher) closed -= Rational((r - 4) * t);
      out.expect(direct == 4 * closed, "numeric instance " + std::to_string(i));
      out.expect(margin_on_profile(p, 3) == direct, "library margin " + std::to_string(i));
      ++instances;
    }
    std::uint64_t profiles = 0;
    for (int k = 4; k <= 6; ++k) {
      SearchQuery q;
      q.curve_class = CurveClass::one_one();
      q.k = k;
      q.require_tk_zero = true;
      enumerate(q, [&](const ConfigurationProfile& p) {
        const bool sign = margin_on_profile(p, 3) >= 0;
        out.expect(sign == hirzebruch_one_one(p).holds, "sign agreement");
        ++profiles;
      });
    }
    out.detail << " " << instances << " instantiations, " << profiles << " quadric profiles";
  });

  criterion(6, "geometry oracle", 30.0, [](Outcome& out) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> kd(2, 8);
    for (int i = 0; i < 200; ++i) {
      const auto lines = random_lines(rng, kd(rng));
      std::vector<PlaneCurve> curves;
      for (const auto& l : lines) curves.push_back(PlaneCurve::line(Q, l[0], l[1], l[2]));
      const auto p = extract_profile(GeometricConfiguration(Q, curves));
      out.expect(p.t() == oracle::line_profile(lines), "line configuration " + std::to_string(i));
    }
    const auto F = conic(1, 1, -2, 0, 0, 0), G = conic(2, -1, -1, 0, 0, 0);
    const auto pts = intersect(F, G);
    out.expect(pts.size() == 4, "four intersection points");
    for (const auto& ip : pts) {
      out.expect(ip.multiplicity == 1 && transversal_at(F, G, ip.point), "transversal");
      for (int c = 0; c < 3; ++c) out.expect(ip.point[c].is_rational(), "rational point");
    }
    auto member = [](long a, long b) { return conic(a + 2 * b, a - b, -2 * a - b, 0, 0, 0); };
    const auto pencil = extract_profile(
        GeometricConfiguration(Q, {member(1, 0), member(0, 1), member(1, 2), member(2, 1), member(1, 3)}));
    out.expect(pencil == ConfigurationProfile(CurveClass::conic(), 5, {{5, 4}}), "pencil profile");
    out.expect(local_h(pencil).h == 0, "pencil h");
  });

  criterion(7, "Cremona coherence", 10.0, [](Outcome& out) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> cd(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> kd(3, 6);
    auto coeff = [&] { return sign(rng) ? cd(rng) : -cd(rng); };
    int checked = 0, skipped = 0;
    for (int trial = 0; trial < 300 && checked < 60; ++trial) {
      const int k = kd(rng);
      std::vector<PlaneCurve> curves;
      while (static_cast<int>(curves.size()) < k) {
        const auto c = conic(0, 0, 0, coeff(), coeff(), coeff());
        if (std::find(curves.begin(), curves.end(), c) == curves.end()) curves.push_back(c);
      }
      const GeometricConfiguration config(Q, curves);
      ConfigurationProfile before(CurveClass::conic(), 0, {});
      try {
        before = extract_profile(config);
      } catch (const GeometryError& e) {
        if (e.kind() != GeometryErrorKind::NonTransversalIntersection) throw;
        ++skipped;
        continue;
      }
      if (before.top_count() != 3) {
        ++skipped;
        continue;
      }
      const auto after = extract_profile(cremona_transform(config));
      out.expect(after == cremona_profile(before, CremonaMode::CommonPoints), "trial " + std::to_string(trial));
      const auto mb = moments(before), ma = moments(after);
      out.expect(ma.f0 == mb.f0 - 3 && ma.f1 == mb.f1 - 3 * k, "moment shift");
      ++checked;
    }
    out.expect(checked >= 30, "enough transversal configurations");
    out.detail << " " << checked << " configurations, " << skipped << " non-transversal skipped";
  });

  return failures == 0 ? 0 : 1;
}
