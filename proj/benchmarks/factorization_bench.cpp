#include <benchmark/benchmark.h>

#include "posmon/posmon.hpp"

namespace {

using namespace posmon;

FieldElem q(const char* src) { return eval_expr(parse_expr(src), 1, Field::kQ); }

void BM_ReciprocalPrimesOne(benchmark::State& state) {
  const auto m = truncate(paper_example("decreasing-not-bf").family, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.length_set(q("1")));
}
BENCHMARK(BM_ReciprocalPrimesOne)->DenseRange(2, 10, 2);

void BM_TwoTermFamilyThree(benchmark::State& state) {
  const auto m = truncate(paper_example("inf-z3").family, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.factorizations(q("3")));
}
BENCHMARK(BM_TwoTermFamilyThree)->RangeMultiplier(2)->Range(4, 64);

void BM_LongFactorizationsOfOne(benchmark::State& state) {
  const auto m = truncate(paper_example("not-hereditarily-atomic").family, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.length_set(q("1")));
}
BENCHMARK(BM_LongFactorizationsOfOne)->DenseRange(1, 4);

void BM_NumericalSemigroup(benchmark::State& state) {
  const auto m = FinMonoid::build(Field::kQ, std::vector<FieldElem>{q("7"), q("11"), q("13"), q("17")});
  const FieldElem x = FieldElem::rational(Rational(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.factorizations(x));
}
BENCHMARK(BM_NumericalSemigroup)->RangeMultiplier(2)->Range(64, 512);

void BM_PrimeFamilyAtoms(benchmark::State& state) {
  const auto family = paper_example("qx-Pprime").family;
  for (auto _ : state) benchmark::DoNotOptimize(truncate(family, static_cast<std::size_t>(state.range(0))).atoms());
}
BENCHMARK(BM_PrimeFamilyAtoms)->DenseRange(2, 12, 5);

void BM_ParseAndEvaluate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_expr(parse_expr("(2*p(n)-floor(p(n)/2))/p(n)+X^3/(X+n*X^2)"), 50, Field::kQX));
  }
}
BENCHMARK(BM_ParseAndEvaluate);

}  // namespace

BENCHMARK_MAIN();
