#include <benchmark/benchmark.h>

#include <random>

#include "plactic/hypoplactic.hpp"
#include "plactic/rps.hpp"
#include "plactic/stalactic.hpp"
#include "plactic/sylvester.hpp"
#include "plactic/taiga.hpp"

using namespace plactic;

namespace {

Word random_word(std::size_t len, int rank) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(1, rank);
  Word w(len);
  for (auto& s : w) s = d(rng);
  return w;
}

}  // namespace

static void BM_HypoTableau(benchmark::State& state) {
  Word w = random_word(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(hypo::tableau_of(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HypoTableau)->Range(16, 4096);

static void BM_StalTableau(benchmark::State& state) {
  Word w = random_word(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(stal::tableau_of(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StalTableau)->Range(16, 4096);

static void BM_TaigaTree(benchmark::State& state) {
  Word w = random_word(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(taig::tree_of(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TaigaTree)->Range(16, 4096);

static void BM_SylvTree(benchmark::State& state) {
  Word w = random_word(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(sylv::right_tree_of(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SylvTree)->Range(16, 4096);

static void BM_RpsTableau(benchmark::State& state) {
  Word w = random_word(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(rps::tableau_of(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RpsTableau)->Range(16, 4096);

BENCHMARK_MAIN();
