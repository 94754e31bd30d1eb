#include <benchmark/benchmark.h>

#include <random>

#include "plactic/monoid.hpp"

using namespace plactic;

namespace {

Word random_word(std::size_t len, int rank) {
  std::mt19937 rng(54321);
  std::uniform_int_distribution<int> d(1, rank);
  Word w(len);
  for (auto& s : w) s = d(rng);
  return w;
}

template <Semiring S>
void bench_rep(benchmark::State& state, MonoidTag tag, int rank) {
  Word w = random_word(static_cast<std::size_t>(state.range(0)), rank);
  for (auto _ : state)
    benchmark::DoNotOptimize(representation<S>(tag, w, rank));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

static void BM_HypoRepTropical(benchmark::State& state) {
  bench_rep<Tropical>(state, MonoidTag::Hypo, 6);
}
BENCHMARK(BM_HypoRepTropical)->Range(16, 1024);

static void BM_BaxterRepTropical(benchmark::State& state) {
  bench_rep<Tropical>(state, MonoidTag::Baxt, 6);
}
BENCHMARK(BM_BaxterRepTropical)->Range(16, 1024);

static void BM_RpsRepTropical(benchmark::State& state) {
  bench_rep<Tropical>(state, MonoidTag::Rps, 4);
}
BENCHMARK(BM_RpsRepTropical)->Range(16, 1024);

static void BM_RpsRepNatural(benchmark::State& state) {
  bench_rep<Natural>(state, MonoidTag::Rps, 4);
}
BENCHMARK(BM_RpsRepNatural)->Range(16, 1024);

static void BM_FaithfulnessScanHypo(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        faithfulness_scan(MonoidTag::Hypo, 2, static_cast<int>(state.range(0)),
                          SemiringTag::Tropical));
}
BENCHMARK(BM_FaithfulnessScanHypo)->DenseRange(4, 8, 2);
