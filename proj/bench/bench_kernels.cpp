// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "finbound/cats.hpp"
#include "finbound/hausdorff.hpp"
#include "finbound/nominal.hpp"
#include "finbound/superfin.hpp"

using namespace finbound;

namespace {

cats::Obj dense_graph(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<cats::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (rng() % 3 != 0) e.emplace_back(u, v);
  return cats::graph(n, e);
}

void BM_hom_set_serial(benchmark::State& st) {
  auto x = dense_graph(static_cast<int>(st.range(0)), 1), y = dense_graph(5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(cats::serial::hom_set(x, y));
}
void BM_hom_set_parallel(benchmark::State& st) {
  auto x = dense_graph(static_cast<int>(st.range(0)), 1), y = dense_graph(5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(cats::hom_set(x, y));
}
BENCHMARK(BM_hom_set_serial)->Arg(5)->Arg(7);
BENCHMARK(BM_hom_set_parallel)->Arg(5)->Arg(7);

void BM_coverage_serial(benchmark::State& st) {
  auto f = superfin::powfin();
  for (auto _ : st) benchmark::DoNotOptimize(superfin::serial::coverage(f, 4, static_cast<int>(st.range(0))));
}
void BM_coverage_parallel(benchmark::State& st) {
  auto f = superfin::powfin();
  for (auto _ : st) benchmark::DoNotOptimize(superfin::coverage(f, 4, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_coverage_serial)->Arg(6)->Arg(8);
BENCHMARK(BM_coverage_parallel)->Arg(6)->Arg(8);

void BM_natural_endos_serial(benchmark::State& st) {
  auto f = superfin::powfin();
  for (auto _ : st) benchmark::DoNotOptimize(superfin::serial::natural_endos(f, static_cast<int>(st.range(0))));
}
void BM_natural_endos_parallel(benchmark::State& st) {
  auto f = superfin::powfin();
  for (auto _ : st) benchmark::DoNotOptimize(superfin::natural_endos(f, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_natural_endos_serial)->Arg(3)->Arg(4);
BENCHMARK(BM_natural_endos_parallel)->Arg(3)->Arg(4);

void BM_subgroups_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(nominal::serial::subgroups_of_Sn(static_cast<int>(st.range(0))));
}
void BM_subgroups_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(nominal::subgroups_of_Sn(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_subgroups_serial)->Arg(4)->Arg(5);
BENCHMARK(BM_subgroups_parallel)->Arg(4)->Arg(5);

void BM_H_obj_serial(benchmark::State& st) {
  std::mt19937 rng(3);
  auto x = hausdorff::random_space(rng, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(hausdorff::serial::H_obj(x));
}
void BM_H_obj_parallel(benchmark::State& st) {
  std::mt19937 rng(3);
  auto x = hausdorff::random_space(rng, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(hausdorff::H_obj(x));
}
BENCHMARK(BM_H_obj_serial)->Arg(7)->Arg(9);
BENCHMARK(BM_H_obj_parallel)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
