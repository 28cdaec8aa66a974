#include <benchmark/benchmark.h>

#include <memory>

#include "pcw/covers.hpp"
#include "pcw/gf.hpp"
#include "pcw/rng.hpp"
#include "pcw/tanner.hpp"
#include "pcw/weights.hpp"

namespace {

using namespace pcw;

GfMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t q,
                       std::uint64_t seed) {
  Rng rng(seed);
  GfMatrix m(rows, cols, q);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, static_cast<std::uint32_t>(rng.below(q)));
    }
  }
  return m;
}

std::shared_ptr<const TannerGraph> cycle(int n, std::uint32_t q) {
  std::vector<std::vector<int>> checks;
  for (int i = 0; i < n; ++i) checks.push_back({i, (i + 1) % n});
  return std::make_shared<const TannerGraph>(n, n, q, std::move(checks));
}

void BM_Nullspace(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const GfMatrix m = random_matrix(size, size + 4, 5, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nullspace_basis(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Girth(benchmark::State& state) {
  const auto base = cycle(static_cast<int>(state.range(0)), 3);
  const CoverSpec lift = random_lift(base, 4, 7);
  const LiftedGraph lifted = lifted_graph(lift);
  for (auto _ : state) {
    benchmark::DoNotOptimize(girth(lifted.graph));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Girth)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_WeightQsc(benchmark::State& state) {
  Rng rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<std::uint32_t>> counts(n, std::vector<std::uint32_t>(8, 0));
  for (auto& row : counts) {
    for (int unit = 0; unit < 16; ++unit) ++row[rng.below(8)];
  }
  const Pseudocodeword f(8, 16, std::move(counts));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weight_qsc(f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WeightQsc)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_WeightPsk(benchmark::State& state) {
  Rng rng(2);
  std::vector<std::vector<std::uint32_t>> counts(64, std::vector<std::uint32_t>(8, 0));
  for (auto& row : counts) {
    for (int unit = 0; unit < 8; ++unit) ++row[rng.below(8)];
  }
  const Pseudocodeword f(8, 8, std::move(counts));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weight_awgn_psk(f, 8));
  }
}
BENCHMARK(BM_WeightPsk);

void BM_LiftPipeline(benchmark::State& state) {
  const auto base = cycle(4, 3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const CoverSpec cover = random_lift(base, static_cast<std::uint32_t>(state.range(0)), ++seed);
    const auto basis = nullspace_basis(lift_parity_matrix(cover));
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_LiftPipeline)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
