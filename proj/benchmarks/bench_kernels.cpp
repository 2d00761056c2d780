// Kernel benchmarks: the optimized (OpenMP) paths against their naive
// serial references, on the largest gallery instances.
//
//   ./build/benchmarks/starlab_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "starlab/generators.hpp"
#include "starlab/lattice.hpp"

using namespace starlab;

namespace {

const StarSemigroup& bool3() {
  static StarSemigroup s = gen_boolean_matrices(3);
  return s;
}

const StarSemigroup& m2z3() {
  static StarSemigroup s = gen_matrix_ring(2, 3);
  return s;
}

void BM_relation_nabla_kernel(benchmark::State& state) {
  const StarSemigroup& s = bool3();
  for (auto _ : state) {
    RelationMatrix m = build_relation(s, RelKind::kNabla);
    benchmark::DoNotOptimize(m.rows.data());
  }
}
BENCHMARK(BM_relation_nabla_kernel)->Unit(benchmark::kMillisecond);

void BM_relation_nabla_reference(benchmark::State& state) {
  const StarSemigroup& s = bool3();
  for (auto _ : state) {
    RelationMatrix m = ref::build_relation_naive(s, RelKind::kNabla);
    benchmark::DoNotOptimize(m.rows.data());
  }
}
BENCHMARK(BM_relation_nabla_reference)->Unit(benchmark::kMillisecond);

void BM_relation_perp_kernel(benchmark::State& state) {
  const StarSemigroup& s = bool3();
  for (auto _ : state) {
    RelationMatrix m = build_relation(s, RelKind::kPerp);
    benchmark::DoNotOptimize(m.rows.data());
  }
}
BENCHMARK(BM_relation_perp_kernel)->Unit(benchmark::kMillisecond);

void BM_relation_perp_reference(benchmark::State& state) {
  const StarSemigroup& s = bool3();
  for (auto _ : state) {
    RelationMatrix m = ref::build_relation_naive(s, RelKind::kPerp);
    benchmark::DoNotOptimize(m.rows.data());
  }
}
BENCHMARK(BM_relation_perp_reference)->Unit(benchmark::kMillisecond);

void BM_validate_kernel(benchmark::State& state) {
  const StarSemigroup& s = bool3();
  for (auto _ : state) {
    ValidationReport rep = validate(s);
    benchmark::DoNotOptimize(rep.ok);
  }
}
BENCHMARK(BM_validate_kernel)->Unit(benchmark::kMillisecond);

void BM_validate_reference(benchmark::State& state) {
  const StarSemigroup& s = bool3();
  for (auto _ : state) {
    std::array<int, 3> w{};
    bool ok = ref::associative_naive(s.n(), s.mul_table(), &w);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_validate_reference)->Unit(benchmark::kMillisecond);

void BM_closure_kernel(benchmark::State& state) {
  const StarSemigroup& s = m2z3();
  for (auto _ : state) {
    PolarLattice lat = closed_lattice(s, RelKind::kPerp);
    benchmark::DoNotOptimize(lat.size());
  }
}
BENCHMARK(BM_closure_kernel)->Unit(benchmark::kMillisecond);

void BM_closure_reference(benchmark::State& state) {
  // The 2^n sweep only fits small carriers; bool:2 is the comparison
  // point for the naive route.
  static StarSemigroup s = gen_boolean_matrices(2);
  RelationMatrix rel = build_relation(s, RelKind::kPerp);
  for (auto _ : state) {
    auto sets = ref::closed_sets_naive(s, rel);
    benchmark::DoNotOptimize(sets.size());
  }
}
BENCHMARK(BM_closure_reference)->Unit(benchmark::kMillisecond);

void BM_closure_kernel_small(benchmark::State& state) {
  static StarSemigroup s = gen_boolean_matrices(2);
  for (auto _ : state) {
    PolarLattice lat = closed_lattice(s, RelKind::kPerp);
    benchmark::DoNotOptimize(lat.size());
  }
}
BENCHMARK(BM_closure_kernel_small)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
