// Microbenchmarks for the hot paths: exact rational elimination, nerve
// assembly, graded commutator echelonization, and the cyclic bicomplex.

#include <benchmark/benchmark.h>

#include <random>

#include "homcolim/cyclic.hpp"
#include "homcolim/fincat.hpp"
#include "homcolim/freegraded.hpp"
#include "homcolim/hochschild.hpp"
#include "homcolim/echelon.hpp"
#include "homcolim/matrix.hpp"
#include "homcolim/struct_algebra.hpp"

using namespace homcolim;

namespace {

QMat random_matrix(int rows, int cols, std::mt19937& rng) {
  QMat m(rows, cols);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (num(rng) > 2) m.set(i, j, Rat(num(rng), den(rng)));
  return m;
}

void BM_rank_dense_rational(benchmark::State& state) {
  std::mt19937 rng(12345);
  int n = static_cast<int>(state.range(0));
  QMat m = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank_of(m));
}
BENCHMARK(BM_rank_dense_rational)->Arg(32)->Arg(64)->Arg(128);

void BM_rref_with_kernel(benchmark::State& state) {
  std::mt19937 rng(321);
  int n = static_cast<int>(state.range(0));
  QMat m = random_matrix(n / 2, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_with_kernel)->Arg(32)->Arg(64)->Arg(128);

void BM_nerve_colimit(benchmark::State& state) {
  // chain poset 0 < 1 < ... < k with a constant Q^2 functor
  int k = static_cast<int>(state.range(0));
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) leq[i][j] = true;
  std::vector<bool> flat;
  for (const auto& row : leq) flat.insert(flat.end(), row.begin(), row.end());
  FinCategory c = poset_category(k, flat);
  QFunctor m = constant_functor<Rat>(c, 2);
  for (auto _ : state) benchmark::DoNotOptimize(derived_colim(c, m, 3));
}
BENCHMARK(BM_nerve_colimit)->Arg(4)->Arg(5)->Arg(6);

void BM_hochschild_truncated_poly(benchmark::State& state) {
  // tQ[t]/(t^k), unitalized, ungraded normalized complex to degree 3
  int k = static_cast<int>(state.range(0));
  StructAlgebra a = unitalize(zero_mult_algebra(0));  // placeholder shape
  {
    StructAlgebra t;
    t.dim = k - 1;
    t.unital = false;
    t.prod.assign(k - 1, std::vector<QVec>(k - 1));
    for (int i = 1; i < k; ++i)
      for (int j = 1; j < k; ++j)
        t.prod[i - 1][j - 1] = i + j < k ? QVec::unit(i + j - 1) : QVec();
    a = unitalize(t);
  }
  Bimodule m = regular_bimodule(a);
  for (auto _ : state) benchmark::DoNotOptimize(hochschild(a, m, 3));
}
BENCHMARK(BM_hochschild_truncated_poly)->Arg(3)->Arg(4);

void BM_cyclic_bicomplex(benchmark::State& state) {
  StructAlgebra dual;
  dual.dim = 2;
  dual.unital = true;
  dual.unit = QVec::unit(0);
  dual.prod = {{QVec::unit(0), QVec::unit(1)}, {QVec::unit(1), QVec()}};
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_homology(dual, d));
}
BENCHMARK(BM_cyclic_bicomplex)->Arg(4)->Arg(6);

void BM_commutator_component(benchmark::State& state) {
  // dim [F,F]_w for the free algebra on two weight-1 generators
  int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GradedFreeAlgebra f({1, 1}, w);
    Int neck = necklace_count(2, w);
    benchmark::DoNotOptimize(lemma56_dimension_check(2, w));
    benchmark::DoNotOptimize(neck);
  }
}
BENCHMARK(BM_commutator_component)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
