#include <benchmark/benchmark.h>

#include "demival/expression.hpp"
#include "demival/function_field.hpp"
#include "demival/kronecker_factor.hpp"
#include "demival/quadratic.hpp"
#include "demival/rational_field.hpp"
#include "demival/sampling.hpp"

namespace {

using namespace demival;

void BM_ContentValueQ(benchmark::State& state) {
  Sampler s(1);
  const auto primes = primes_up_to(10000);
  const auto v = rational_divisor_valuation();
  const auto f = s.polynomial<Rational>(static_cast<int>(state.range(0)), [&] { return s.smooth_rational(primes, 2); });
  const auto g = s.polynomial<Rational>(static_cast<int>(state.range(0)), [&] { return s.smooth_rational(primes, 2); });
  for (auto _ : state) benchmark::DoNotOptimize(content_value(f * g, v));
}
BENCHMARK(BM_ContentValueQ)->Arg(4)->Arg(8)->Arg(16);

void BM_ContentValueQuad(benchmark::State& state) {
  Sampler s(2);
  const QuadContext ctx(-5);
  const auto v = quad_valuation(ctx);
  const auto f = s.polynomial<QuadElement>(static_cast<int>(state.range(0)), [&] { return s.quad_element(ctx, 100, 10); });
  for (auto _ : state) benchmark::DoNotOptimize(content_value(f, v));
}
BENCHMARK(BM_ContentValueQuad)->Arg(4)->Arg(8);

void BM_QuadDivisorValuation(benchmark::State& state) {
  Sampler s(3);
  const QuadContext ctx(-5);
  std::vector<QuadElement> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(s.quad_integral(ctx, state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(quad_divisor_valuation(ctx, xs[i++ % xs.size()]));
}
BENCHMARK(BM_QuadDivisorValuation)->Arg(50)->Arg(5000);

void BM_KroneckerFactor(benchmark::State& state) {
  const QPoly f = parse_polynomial_q(state.range(0) == 4 ? "X^4 + 4" : "X^6 - 3*X^4 + 2*X^3 - 7");
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_factor(f));
}
BENCHMARK(BM_KroneckerFactor)->Arg(4)->Arg(6);

void BM_PrincipalGeneratorQuad(benchmark::State& state) {
  const QuadContext ctx(-5);
  const auto v = quad_valuation(ctx);
  using KF = RationalFunction<QuadElement>;
  const KroneckerIdeal<QuadElement> J(v, {KF(QuadElement(2)), KF(QuadElement(Rational(1), Rational(1), -5)),
                                          KF(QuadElement(3))});
  for (auto _ : state) benchmark::DoNotOptimize(rw_principal_generator(J));
}
BENCHMARK(BM_PrincipalGeneratorQuad);

}  // namespace

BENCHMARK_MAIN();
