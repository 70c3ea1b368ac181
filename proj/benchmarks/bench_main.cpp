#include <benchmark/benchmark.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystden/ball_bfs.hpp"
#include "crystden/constructors.hpp"
#include "crystden/matrix.hpp"
#include "crystden/nilpotent.hpp"
#include "crystden/point_group.hpp"
#include "crystden/poly.hpp"

namespace {

using namespace crystden;

IntMatrix mat2(int a, int b, int c, int d) {
  IntMatrix m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  int dim = 0;
  for (const IntMatrix& b : blocks) dim += b.n;
  IntMatrix m(dim);
  int off = 0;
  for (const IntMatrix& b : blocks) {
    for (int i = 0; i < b.n; ++i) {
      for (int j = 0; j < b.n; ++j) m.at(off + i, off + j) = b.at(i, j);
    }
    off += b.n;
  }
  return m;
}

CrystGroup catalog_group(const std::string& name) {
  for (CatalogEntry& e : load_catalog()) {
    if (e.name == name) return std::move(e.group);
  }
  throw std::runtime_error("no catalog entry named " + name);
}

// Determinant of a block matrix, the shape every density census feeds to
// the fraction-free elimination.
void BM_MatDetBlocks(benchmark::State& state) {
  const IntMatrix m = block_diag({mat2(1, -1, 1, 0),
                                  companion(cyclotomic(7)),
                                  companion(cyclotomic(8))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_det(m));
  }
}
BENCHMARK(BM_MatDetBlocks);

// Census inner loop: fixed-vector test on one product element.
void BM_HasEigenvalueOne(benchmark::State& state) {
  const CrystGroup g = rational_density_group(1, 8);
  const IntMatrix& m = g.point_group.elements.back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_eigenvalue_one(m));
  }
}
BENCHMARK(BM_HasEigenvalueOne);

// Closing the hexagonal reflection group from two generators.
void BM_ClosureHexagonal(benchmark::State& state) {
  const std::vector<IntMatrix> gens{mat2(1, -1, 1, 0), mat2(0, 1, 1, 0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(gens));
  }
}
BENCHMARK(BM_ClosureHexagonal);

// Exact census over a 720-element point group in dimension 11.
void BM_DensityCensus(benchmark::State& state) {
  const CrystGroup g = rational_density_group(1, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_value(g.point_group));
  }
}
BENCHMARK(BM_DensityCensus)->Unit(benchmark::kMillisecond);

// Affine ball enumeration with per-coset torsion tallies.
void BM_BallCensusPmm(benchmark::State& state) {
  const CrystGroup pmm = catalog_group("pmm");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball_census(pmm, {8}));
  }
}
BENCHMARK(BM_BallCensusPmm)->Unit(benchmark::kMillisecond);

// One truncated BCH product in the step-2 algebra of dimension 5.
void BM_BchMultiply(benchmark::State& state) {
  const NilAlgebra h2 = heisenberg(2);
  const NilElement x =
      nil_element(h2, {Rat(1, 2), Rat(-2, 3), Rat(1), Rat(3, 4), Rat(0)});
  const NilElement y =
      nil_element(h2, {Rat(-1, 3), Rat(1, 2), Rat(2), Rat(-1), Rat(1, 4)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(bch_multiply(x, y));
  }
}
BENCHMARK(BM_BchMultiply);

// Coordinate change to the second kind and back.
void BM_SecondKindRoundTrip(benchmark::State& state) {
  const NilAlgebra h2 = heisenberg(2);
  const NilElement x =
      nil_element(h2, {Rat(1, 2), Rat(-2, 3), Rat(1), Rat(3, 4), Rat(1, 6)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_second_kind(h2, to_second_kind(x)));
  }
}
BENCHMARK(BM_SecondKindRoundTrip);

// Nilpotent lattice ball with the order-4 twist, radius 4.
void BM_NilBallCensus(benchmark::State& state) {
  const NilAlgebra h2 = heisenberg(2);
  const NilAutomorphism t = h2_automorphism(h2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nil_ball_bfs(h2, &t, 4));
  }
}
BENCHMARK(BM_NilBallCensus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
