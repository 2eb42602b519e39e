#include <benchmark/benchmark.h>

#include "nilorb/int_matrix.hpp"
#include "nilorb/jordan.hpp"
#include "nilorb/orbit_invariants.hpp"
#include "nilorb/springer.hpp"

using namespace nilorb;

// Cell enumeration for a staircase-ish shape of the given total.
static void BM_EnumerateCells(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<int> parts;
  for (int left = m, k = 3; left > 0; left -= k) parts.push_back(std::min(k, left));
  const Partition p(parts);
  EnumerationOptions eo;
  eo.bound = m;
  eo.keep_cells = false;
  eo.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cells(p, eo).poincare);
  state.SetLabel(p.to_string());
}
BENCHMARK(BM_EnumerateCells)->Args({7, 1})->Args({8, 1})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);

static void BM_OracleSweep(benchmark::State& state) {
  const LieType t(Family::D, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t hits = 0;
    for (std::uint32_t mask = 0; mask < (1u << t.rank()); ++mask) {
      const auto j = SubsetJ::from_mask(mask, t.rank());
      hits += jordan_partition(representative_matrix(t, j)) == orbit_partition(t, j).partition;
    }
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_OracleSweep)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ExactRank(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  IntMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = static_cast<int>((r * 7 + c * 13) % 11) - 5;
  }
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
}
BENCHMARK(BM_ExactRank)->RangeMultiplier(2)->Range(8, 32);

BENCHMARK_MAIN();
