#include <benchmark/benchmark.h>

#include "hoc/courant.hpp"
#include "hoc/dsl.hpp"
#include "hoc/exterior.hpp"
#include "hoc/nambu.hpp"
#include "hoc/sampler.hpp"

namespace {

using namespace hoc;

void BM_PolyMultiply(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Sampler s(1);
  const Poly a = s.poly(dim, 3), b = s.poly(dim, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(6);

void BM_RationalArithmetic(benchmark::State& state) {
  const Rational a = make_rational(7, 12), b = make_rational(-5, 18);
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a);
}
BENCHMARK(BM_RationalArithmetic);

void BM_DorfmanBracket(benchmark::State& state) {
  const Context ctx = Context::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Sampler s(2);
  const Section e1 = random_section(s, ctx), e2 = random_section(s, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(dorfman_bracket(e1, e2));
}
BENCHMARK(BM_DorfmanBracket)->Args({2, 1})->Args({3, 2})->Args({4, 3});

void BM_LieDerivativeForm(benchmark::State& state) {
  Sampler s(3);
  const MultiVec x = s.vector_field(4);
  const Form a = s.form(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lie_derivative(x, a));
}
BENCHMARK(BM_LieDerivativeForm);

void BM_DorfmanLeibnizCheck(benchmark::State& state) {
  const Context ctx = Context::make(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_dorfman_leibniz(ctx, 5, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DorfmanLeibnizCheck)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_NambuFundamentalCheck(benchmark::State& state) {
  const NambuCandidate c(Context::make(4, 2), dsl::parse_multivec("x2*@1^@2^@3 + @2^@3^@4", 4, 3));
  for (auto _ : state) benchmark::DoNotOptimize(np_fundamental_check(c, 2));
}
BENCHMARK(BM_NambuFundamentalCheck)->Unit(benchmark::kMillisecond);

void BM_DslRoundTrip(benchmark::State& state) {
  Sampler s(4);
  const Form f = s.form(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dsl::parse_form(dsl::print(f), 4, 2));
}
BENCHMARK(BM_DslRoundTrip);

}  // namespace

BENCHMARK_MAIN();
