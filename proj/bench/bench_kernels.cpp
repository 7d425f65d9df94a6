// Serial reference vs OpenMP kernels on the hot paths: row ranking,
// per-sample diversity strength, and weighted fusion.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cfa/fusion.hpp"
#include "cfa/ranking.hpp"
#include "cfa/rsc.hpp"
#include "reference.hpp"

namespace {

cfa::Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  cfa::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

std::vector<cfa::Matrix> model_curves(std::size_t t, std::size_t rows, std::size_t cols) {
  std::vector<cfa::Matrix> curves;
  for (std::size_t m = 0; m < t; ++m)
    curves.push_back(cfa::rsc_curves(random_matrix(rows, cols, 10 + m),
                                     cfa::CurveSource::scores));
  return curves;
}

void bm_rank_rows_serial(benchmark::State& state) {
  const cfa::Matrix scores = random_matrix(state.range(0), 40, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(cfa::ref::rank_rows(scores, cfa::TiePolicy::average));
}

void bm_rank_rows_parallel(benchmark::State& state) {
  const cfa::Matrix scores = random_matrix(state.range(0), 40, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(cfa::rank_rows(scores, cfa::TiePolicy::average));
}

void bm_ds_weights_serial(benchmark::State& state) {
  const auto curves = model_curves(5, state.range(0), 40);
  for (auto _ : state) benchmark::DoNotOptimize(cfa::ref::ds_weights(curves));
}

void bm_ds_weights_parallel(benchmark::State& state) {
  const auto curves = model_curves(5, state.range(0), 40);
  for (auto _ : state) benchmark::DoNotOptimize(cfa::ds_weights(curves));
}

void bm_fuse_scores_serial(benchmark::State& state) {
  std::vector<cfa::Matrix> scores;
  for (std::size_t m = 0; m < 5; ++m)
    scores.push_back(random_matrix(state.range(0), 40, 20 + m));
  const cfa::Combination combo({0, 1, 2, 3, 4});
  cfa::WeightTable weights;
  weights.scalar = {0.9, 0.7, 0.8, 0.6, 0.75};
  for (auto _ : state)
    benchmark::DoNotOptimize(cfa::ref::fuse_scores(combo, scores, weights));
}

void bm_fuse_scores_parallel(benchmark::State& state) {
  std::vector<cfa::Matrix> scores;
  for (std::size_t m = 0; m < 5; ++m)
    scores.push_back(random_matrix(state.range(0), 40, 20 + m));
  const cfa::Combination combo({0, 1, 2, 3, 4});
  cfa::WeightTable weights;
  weights.scalar = {0.9, 0.7, 0.8, 0.6, 0.75};
  for (auto _ : state)
    benchmark::DoNotOptimize(cfa::fuse_scores(combo, scores, weights));
}

}  // namespace

BENCHMARK(bm_rank_rows_serial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rank_rows_parallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ds_weights_serial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ds_weights_parallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_fuse_scores_serial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_fuse_scores_parallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
