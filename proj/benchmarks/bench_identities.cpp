#include <benchmark/benchmark.h>

#include "plactic/identities.hpp"
#include "plactic/presentations.hpp"

using namespace plactic;

static void BM_HoldsInFiniteH(benchmark::State& state) {
  const auto id = ident::parse_identity("xyxy=yxyx");
  const auto h = ident::h_monoid();
  for (auto _ : state) benchmark::DoNotOptimize(ident::holds_in(id, h));
}
BENCHMARK(BM_HoldsInFiniteH);

static void BM_DecideSylv(benchmark::State& state) {
  const auto id = ident::parse_identity("xyzxty=yxzxty");
  for (auto _ : state) benchmark::DoNotOptimize(ident::holds_sylv(id));
}
BENCHMARK(BM_DecideSylv);

static void BM_BoundedCheckRps(benchmark::State& state) {
  const auto id = ident::parse_identity("xyxyxy=xyxyyx");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ident::bounded_counterexample(id, MonoidTag::Rps, 2, 2));
}
BENCHMARK(BM_BoundedCheckRps);

static void BM_CongruenceClassStal(benchmark::State& state) {
  const Word w = parse_word("123123");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pres::congruence_class(pres::Family::Stal, w, 3));
}
BENCHMARK(BM_CongruenceClassStal);
