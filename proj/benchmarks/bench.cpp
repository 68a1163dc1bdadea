#include <benchmark/benchmark.h>

#include <liegrad/demo.hpp>
#include <liegrad/grading.hpp>
#include <liegrad/semigroup.hpp>

#include <random>

using namespace liegrad;

namespace {

std::vector<Row> random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Row> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    Row row;
    row.reserve(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      row.push_back(std::move(q));
    }
    out.push_back(std::move(row));
  }
  return out;
}

void BM_RrefRandom12x12(benchmark::State& state) {
  std::mt19937 rng(42);
  const std::vector<Row> rows = random_matrix(rng, 12, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(rows));
  }
}
BENCHMARK(BM_RrefRandom12x12);

void BM_AssociativeClosure(benchmark::State& state) {
  const OperatorSet gens = demo::build_operators();
  for (auto _ : state) {
    benchmark::DoNotOptimize(associative_closure(gens));
  }
}
BENCHMARK(BM_AssociativeClosure);

void BM_LieClosure(benchmark::State& state) {
  const OperatorSet gens = demo::build_operators();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lie_closure(gens));
  }
}
BENCHMARK(BM_LieClosure);

void BM_BuildGradedAlgebra(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(demo::build_graded_algebra());
  }
}
BENCHMARK(BM_BuildGradedAlgebra);

void BM_Complete(benchmark::State& state) {
  const RelationSet relations = relation_set(demo::build_graded_algebra().grading);
  for (auto _ : state) {
    benchmark::DoNotOptimize(complete(relations));
  }
}
BENCHMARK(BM_Complete);

void BM_Decide(benchmark::State& state) {
  const RelationSet relations = relation_set(demo::build_graded_algebra().grading);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(relations));
  }
}
BENCHMARK(BM_Decide);

void BM_BfsOracle(benchmark::State& state) {
  const RelationSet relations = relation_set(demo::build_graded_algebra().grading);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfs_oracle(relations, degree));
  }
}
BENCHMARK(BM_BfsOracle)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
