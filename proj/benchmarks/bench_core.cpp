#include <benchmark/benchmark.h>

#include <quadlie/catalog.hpp>
#include <quadlie/derivations.hpp>
#include <quadlie/invariants.hpp>
#include <quadlie/isomorphy.hpp>

using namespace quadlie;

namespace {

Matrix random_like_matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = Rational((static_cast<long>(r) * 7 + c * 3) % 11 - 5, 1 + (r + c) % 3);
  return m;
}

void bm_rref(benchmark::State& state) {
  const Matrix m = random_like_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void bm_nullspace(benchmark::State& state) {
  Matrix m = random_like_matrix(state.range(0));
  for (std::size_t r = 0; r + 1 < m.rows(); r += 2)  // force a kernel
    m.set_row(r + 1, m.row(r));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}

void bm_validate(benchmark::State& state) {
  const QuadraticLieAlgebra q = catalog::make("g8,3");
  for (auto _ : state) benchmark::DoNotOptimize(validate(q).ok());
}

void bm_fingerprint(benchmark::State& state) {
  const QuadraticLieAlgebra q = catalog::make("g8,1");
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(q));
}

void bm_skew_derivation_space(benchmark::State& state) {
  const QuadraticLieAlgebra q = catalog::make("g6,1");
  for (auto _ : state) benchmark::DoNotOptimize(skew_derivation_space(q).dim());
}

void bm_minimal_polynomial(benchmark::State& state) {
  const Matrix m = random_like_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_polynomial(m));
}

void bm_witness_search_hit(benchmark::State& state) {
  const QuadraticLieAlgebra a = catalog::make("g6,2", {{"lambda", 2}});
  const QuadraticLieAlgebra b = catalog::make("g6,2", {{"lambda", Rational(1, 2)}});
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(a, b, 100000));
}

void bm_witness_search_exhaust(benchmark::State& state) {
  const QuadraticLieAlgebra a = catalog::make("g8,5");
  const QuadraticLieAlgebra b = catalog::make("g8,6");
  const std::size_t budget = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(a, b, budget));
}

}  // namespace

BENCHMARK(bm_rref)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_nullspace)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_validate);
BENCHMARK(bm_fingerprint);
BENCHMARK(bm_skew_derivation_space);
BENCHMARK(bm_minimal_polynomial)->Arg(4)->Arg(8);
BENCHMARK(bm_witness_search_hit);
BENCHMARK(bm_witness_search_exhaust)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
