// Parallel kernels against their serial twins on the larger catalog tensors.

#include <benchmark/benchmark.h>

#include "grayfac/catalog.hpp"
#include "grayfac/search.hpp"
#include "grayfac/tensor.hpp"

using namespace grayfac;

namespace {

Limits big() {
  Limits l;
  l.max_objects = 16;
  l.max_one_cells = 200;
  l.max_two_cells = 2000;
  l.max_cells = 200000;
  return l;
}

Fin2CategoryPtr tensor_for(int which) {
  switch (which) {
    case 0:
      return gray_tensor(standard_cell(2), standard_cell(2), big()).cat;
    case 1:
      return gray_tensor(catalog_get("gray_s2_s1"), standard_cell(1), big()).cat;
    default:
      return gray_tensor(catalog_get("gray_s2_s1"), catalog_get("pc_square"), big()).cat;
  }
}

void BM_ValidateParallel(benchmark::State& state) {
  auto c = tensor_for(static_cast<int>(state.range(0)));
  for (auto _ : state) c->validate(true);
  state.SetLabel(std::to_string(c->num_2cells()) + " 2-cells");
}

void BM_ValidateSerial(benchmark::State& state) {
  auto c = tensor_for(static_cast<int>(state.range(0)));
  for (auto _ : state) validate_serial(*c);
  state.SetLabel(std::to_string(c->num_2cells()) + " 2-cells");
}

void BM_CountParallel(benchmark::State& state) {
  auto a = gray_tensor(standard_cell(1), standard_cell(1)).cat;
  auto b = state.range(0) == 0 ? pseudo_commutative_square() : catalog_get("gray_s2_s1");
  for (auto _ : state) benchmark::DoNotOptimize(count_2functors(a, b, big(), true));
}

void BM_CountSerial(benchmark::State& state) {
  auto a = gray_tensor(standard_cell(1), standard_cell(1)).cat;
  auto b = state.range(0) == 0 ? pseudo_commutative_square() : catalog_get("gray_s2_s1");
  for (auto _ : state) benchmark::DoNotOptimize(count_2functors(a, b, big(), false));
}

void BM_GrayTensor(benchmark::State& state) {
  auto a = catalog_get("gray_s2_s1");
  auto b = state.range(0) == 0 ? standard_cell(2) : catalog_get("pc_square");
  for (auto _ : state) benchmark::DoNotOptimize(gray_tensor(a, b, big()));
}

}  // namespace

BENCHMARK(BM_ValidateParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountSerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GrayTensor)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
