#include <benchmark/benchmark.h>

#include <cstdint>

#include "gmdiv/bigint.hpp"
#include "gmdiv/mersenne.hpp"
#include "gmdiv/number_theory.hpp"
#include "gmdiv/polyring.hpp"

namespace {

using namespace gmdiv;

void BM_EvalMersenne(benchmark::State& state) {
  const std::uint64_t d = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_mersenne(2, d));
  }
}
BENCHMARK(BM_EvalMersenne)->Arg(64)->Arg(1024)->Arg(16384);

void BM_DividesOracle(benchmark::State& state) {
  const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
  DivInstance inst(3, m, 4, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(divides_oracle(inst));
  }
}
BENCHMARK(BM_DividesOracle)->Arg(24)->Arg(240)->Arg(2400);

void BM_DividesCriterion(benchmark::State& state) {
  const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(divides_criterion(m, 4, 6));
  }
}
BENCHMARK(BM_DividesCriterion)->Arg(24)->Arg(240)->Arg(2400);

void BM_QuotientViaLcm(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_via_lcm(16, n, 3));
  }
}
BENCHMARK(BM_QuotientViaLcm)->Arg(5)->Arg(50)->Arg(500);

void BM_Explain(benchmark::State& state) {
  DivInstance inst(3, static_cast<std::uint64_t>(state.range(0)), 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(explain(inst));
  }
}
BENCHMARK(BM_Explain)->Arg(6)->Arg(7)->Arg(9);

void BM_Factorize(benchmark::State& state) {
  mpz_class n = pow_u64(2, static_cast<std::uint64_t>(state.range(0))) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
  }
}
BENCHMARK(BM_Factorize)->Arg(32)->Arg(64)->Arg(96);

void BM_ZsigmondyWitness(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zsigmondy_witness(3, n));
  }
}
BENCHMARK(BM_ZsigmondyWitness)->Arg(12)->Arg(24)->Arg(36);

void BM_CyclotomicPoly(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclotomic_poly(n));
  }
}
BENCHMARK(BM_CyclotomicPoly)->Arg(12)->Arg(105)->Arg(1024);

void BM_PolyQuotient(benchmark::State& state) {
  const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
  IntPoly num = poly_mersenne(5, m);
  IntPoly den = poly_mersenne(5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_exact_div(num, den));
  }
}
BENCHMARK(BM_PolyQuotient)->Arg(7)->Arg(49)->Arg(343);

}  // namespace

BENCHMARK_MAIN();
