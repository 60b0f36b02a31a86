#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "legomena/corpus.hpp"
#include "legomena/models.hpp"
#include "legomena/sampling.hpp"

namespace {

using namespace legomena;

KVector random_kvector(std::size_t len) {
  KVector k(len, 0.0);
  std::uint64_t state = 12345;
  for (std::size_t n = 1; n < len; ++n) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    if ((state >> 60) < 4) k[n] = double(1 + (state >> 32) % 50);
  }
  return k;
}

void BM_TransformKvector(benchmark::State& state) {
  const auto k = random_kvector(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(transform_kvector(k, 0.5));
  }
}
BENCHMARK(BM_TransformKvector)->Arg(1000)->Arg(10000)->Arg(60000);

void BM_SeriesModel(benchmark::State& state) {
  const auto k = random_kvector(std::size_t(state.range(0)));
  double mass = 0.0;
  for (std::size_t n = 0; n < k.size(); ++n) mass += double(n) * k[n];
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_model(k, mass, 0.3 * mass));
  }
}
BENCHMARK(BM_SeriesModel)->Arg(1000)->Arg(60000);

void BM_DeckRecursion(benchmark::State& state) {
  const DeckSpec spec{std::uint64_t(state.range(0)), 10};
  for (auto _ : state) {
    benchmark::DoNotOptimize(deck_types_recursive(spec, spec.tokens() / 2));
  }
}
BENCHMARK(BM_DeckRecursion)->Arg(100)->Arg(10000);

void BM_SampleCurve(benchmark::State& state) {
  std::vector<std::string> tokens;
  for (int r = 1; r <= state.range(0); ++r) {
    for (int i = 0; i < state.range(0) / r; ++i) {
      tokens.push_back("w" + std::to_string(r));
    }
  }
  const Corpus corpus = Corpus::from_tokens(tokens);
  const auto grid = default_grid(corpus.token_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_ttr_curve(corpus, grid, 1, 1));
  }
}
BENCHMARK(BM_SampleCurve)->Arg(1000)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
