#include <benchmark/benchmark.h>

#include <cmath>
#include <string>

#include "secant/conics.hpp"
#include "secant/engine.hpp"
#include "secant/mercator.hpp"
#include "secant/rational_integration.hpp"
#include "secant/trig_parser.hpp"

using namespace secant;

static void BM_IntegrateSecant(benchmark::State& state) {
  const Method method = static_cast<Method>(state.range(0));
  const TrigRational sec = TrigRational::sec();
  for (auto _ : state) benchmark::DoNotOptimize(integrate_trig(sec, method));
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_IntegrateSecant)->DenseRange(0, 4);

static void BM_IntegrateAuto(benchmark::State& state) {
  const TrigRational r = parse_trig("(1+2*sin(x)^2)/(cos(x)*(2+sin(x)))");
  for (auto _ : state) benchmark::DoNotOptimize(integrate_trig(r, Method::Auto));
}
BENCHMARK(BM_IntegrateAuto);

static void BM_IntegrateRational(benchmark::State& state) {
  const Polynomial u = Polynomial::identity("u");
  Polynomial den = Polynomial::constant(1, "u");
  for (long k = 1; k <= state.range(0); ++k) den *= (u - Polynomial::constant(k, "u")) * (u * u + Polynomial::constant(k * k, "u"));
  const RationalFunction f(Polynomial::constant(1, "u"), den);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_rational(f));
}
BENCHMARK(BM_IntegrateRational)->DenseRange(1, 4);

static void BM_EnumerateTriples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primitive_triples(state.range(0)));
}
BENCHMARK(BM_EnumerateTriples)->Range(100, 100000);

static void BM_MercatorNumeric(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mercator_y_numeric(1.4, tol));
}
BENCHMARK(BM_MercatorNumeric)->DenseRange(6, 12, 2);
BENCHMARK_MAIN();
