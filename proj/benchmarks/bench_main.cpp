#include <benchmark/benchmark.h>

#include <random>

#include "crtube/catalog.hpp"
#include "crtube/hol_solver.hpp"
#include "crtube/lie_analysis.hpp"

using namespace crtube;

namespace {

Matrix random_rank_deficient(std::size_t rows, std::size_t cols, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  Matrix a(rows, rank), b(rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rank; ++j) a.set(i, j, Scalar(d(rng)));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.set(i, j, Scalar(d(rng)));
  return a * b;
}

}  // namespace

static void BM_ExactNullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_rank_deficient(n, n, n - n / 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_ExactNullspace)->Arg(8)->Arg(16)->Arg(32);

static void BM_NumericNullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_rank_deficient(n, n, n - n / 4, 1).to_mode(Mode::numeric);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_NumericNullspace)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_LightConeHol(benchmark::State& state) {
  Presentation p = build_entry("EI").presentation;
  AssembleOptions opt;
  opt.solve.backend = static_cast<Backend>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_hol(p, opt));
}
BENCHMARK(BM_LightConeHol)
    ->Arg(static_cast<int>(Backend::exact_jet))
    ->Arg(static_cast<int>(Backend::numeric))
    ->Unit(benchmark::kMillisecond);

static void BM_QuadricLevelSetHol(benchmark::State& state) {
  Presentation p = build_entry("EB", CatalogParams{3, 1, Rational(2)}).presentation;
  for (auto _ : state) benchmark::DoNotOptimize(assemble_hol(p));
}
BENCHMARK(BM_QuadricLevelSetHol)->Unit(benchmark::kMillisecond);

static void BM_EyJetDegreeZero(benchmark::State& state) {
  Presentation p = build_entry("EY").presentation;
  for (auto _ : state) benchmark::DoNotOptimize(solve_component(p, 0));
}
BENCHMARK(BM_EyJetDegreeZero)->Unit(benchmark::kMillisecond);

static void BM_SigmaInvariant(benchmark::State& state) {
  GradedLieAlgebra g = assemble_hol(build_entry("EX").presentation);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_invariant(g));
}
BENCHMARK(BM_SigmaInvariant);
BENCHMARK_MAIN();
