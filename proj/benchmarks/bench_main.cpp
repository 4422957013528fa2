#include <benchmark/benchmark.h>

#include <random>

#include "pgph/catalog.hpp"
#include "pgph/coclass.hpp"
#include "pgph/linalg.hpp"
#include "pgph/persistence.hpp"
#include "pgph/resolution.hpp"

namespace {

using namespace pgph;

FpMatrix random_matrix(unsigned p, std::size_t n) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<unsigned> v(0, p - 1);
  FpMatrix a(p, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a.set(r, c, v(rng));
  return a;
}

void BM_RankF2(benchmark::State& state) {
  const auto a = random_matrix(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RankF2)->Arg(256)->Arg(1024)->Arg(2048);

void BM_RankF3(benchmark::State& state) {
  const auto a = random_matrix(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RankF3)->Arg(256)->Arg(1024);

void BM_DihedralResolution(benchmark::State& state) {
  const auto g = family(FamilyKind::dihedral, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(g, 2, 3).rank(4));
}
BENCHMARK(BM_DihedralResolution)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_Order16PersistenceSequence(benchmark::State& state) {
  const auto g = load_group("catalog:16.3").group;
  for (auto _ : state) benchmark::DoNotOptimize(persistence_sequence(g, Functor::L, 5).matrices.size());
}
BENCHMARK(BM_Order16PersistenceSequence)->Unit(benchmark::kMillisecond);

void BM_DihedralOrder64Matrix(benchmark::State& state) {
  const auto g = family(FamilyKind::dihedral, 6);
  for (auto _ : state) benchmark::DoNotOptimize(persistence_matrix(g, Functor::L, 2).size());
}
BENCHMARK(BM_DihedralOrder64Matrix)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
