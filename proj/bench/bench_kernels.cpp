#include <benchmark/benchmark.h>

#include <random>

#include "harbourne/configuration.hpp"
#include "harbourne/search.hpp"

using namespace harbourne;

namespace {

SearchQuery conic_query(int k) {
  SearchQuery q;
  q.curve_class = CurveClass::conic();
  q.k = k;
  q.require_tk_zero = true;
  q.filters = {SearchFilter::LTPolynomial};
  return q;
}

GeometricConfiguration random_lines(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-50, 50);
  const FieldPtr q = NumberField::rationals();
  std::vector<PlaneCurve> lines;
  while (static_cast<int>(lines.size()) < k) {
    const int a = coeff(rng), b = coeff(rng), c = coeff(rng);
    if (a == 0 && b == 0 && c == 0) continue;
    PlaneCurve l = PlaneCurve::line(q, Rational(a), Rational(b), Rational(c));
    bool fresh = true;
    for (const auto& m : lines) fresh = fresh && !(m == l);
    if (fresh) lines.push_back(std::move(l));
  }
  return GeometricConfiguration(q, std::move(lines));
}

void BM_search_serial(benchmark::State& state) {
  const auto q = conic_query(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_h_serial(q));
}

void BM_search_parallel(benchmark::State& state) {
  const auto q = conic_query(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_h(q));
}

void BM_extract_serial(benchmark::State& state) {
  const auto config = random_lines(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(extract_profile_serial(config));
}

void BM_extract_parallel(benchmark::State& state) {
  const auto config = random_lines(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(extract_profile(config));
}

}  // namespace

BENCHMARK(BM_search_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extract_serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extract_parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
