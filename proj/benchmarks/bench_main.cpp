#include <benchmark/benchmark.h>

#include "catcheck/algebra/hopf.hpp"
#include "catcheck/algebra/linearize.hpp"
#include "catcheck/algebra/monoid.hpp"
#include "catcheck/interchange/algebra_functor.hpp"
#include "catcheck/matrix_category.hpp"
#include "catcheck/operators/operator_category.hpp"
#include "catcheck/simplicial/coherent_cube.hpp"
#include "catcheck/simplicial/hc_nerve.hpp"
#include "catcheck/simplicial/horn.hpp"
#include "catcheck/simplicial/nerve.hpp"
#include "catcheck/simplicial/simplicial_category.hpp"

using namespace catcheck;

namespace {

  Matrix dense(Ring const& ring, std::size_t n, std::int64_t seed) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.set_int(i, j, (seed + 3 * i + 7 * j + i * j) % 5);
      }
    }
    return m;
  }

  void BM_Kronecker(benchmark::State& state) {
    auto const n    = static_cast<std::size_t>(state.range(0));
    auto const ring = Ring::prime_field(2);
    auto const a = dense(ring, n, 1), b = dense(ring, n, 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(a.kronecker(b));
    }
  }
  BENCHMARK(BM_Kronecker)->Arg(4)->Arg(8)->Arg(16);

  void BM_Invert(benchmark::State& state) {
    auto const n    = static_cast<std::size_t>(state.range(0));
    auto const ring = Ring::prime_field(3);
    auto const m    = dense(ring, n, 1);
    for (auto _ : state) {
      benchmark::DoNotOptimize(m.invert());
    }
  }
  BENCHMARK(BM_Invert)->Arg(9)->Arg(36)->Arg(64);

  void BM_IsHopfSymmetricGroup(benchmark::State& state) {
    auto const m = Monoid::symmetric_group(static_cast<std::size_t>(state.range(0)));
    auto const c = MatrixCategory(Ring::prime_field(2));
    auto const b = monoid_algebra(m, Ring::prime_field(2));
    for (auto _ : state) {
      benchmark::DoNotOptimize(is_hopf(c, b).hopf);
    }
  }
  BENCHMARK(BM_IsHopfSymmetricGroup)->Arg(2)->Arg(3);

  void BM_AntipodeFromShear(benchmark::State& state) {
    auto const m = Monoid::cyclic(static_cast<std::size_t>(state.range(0)));
    auto const c = MatrixCategory(Ring::prime_field(2));
    auto const b = monoid_algebra(m, Ring::prime_field(2));
    for (auto _ : state) {
      benchmark::DoNotOptimize(antipode_from_shear(c, b).value);
    }
  }
  BENCHMARK(BM_AntipodeFromShear)->Arg(3)->Arg(5)->Arg(7);

  void BM_OperatorCompose(benchmark::State& state) {
    OperatorCategory<MatrixCategory> const op{MatrixCategory(Ring::prime_field(2))};
    auto const& c = op.base();
    auto const x    = std::vector<std::size_t>{2, 2, 2};
    auto const lift = op.cocartesian_lift(PointedMap(3, 2, {1, 0, 2}), x);
    auto const g    = op.make(lift.target, {2}, PointedMap::fold(2),
                              {Matrix::from_rows(c.ring(), {{1, 0, 1, 1}, {0, 1, 1, 0}})});
    for (auto _ : state) {
      benchmark::DoNotOptimize(op.compose(g, lift));
    }
  }
  BENCHMARK(BM_OperatorCompose);

  void BM_Nerve(benchmark::State& state) {
    auto const c = FiniteCategory::ordinal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(nerve(c, 3));
    }
  }
  BENCHMARK(BM_Nerve)->Arg(3)->Arg(6);

  void BM_InnerHorns(benchmark::State& state) {
    auto const n = nerve(FiniteCategory::ordinal(static_cast<std::size_t>(state.range(0))), 3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(horn_check(n.set, HornKind::inner, 3));
    }
  }
  BENCHMARK(BM_InnerHorns)->Arg(3)->Arg(5);

  void BM_HcNerveCube(benchmark::State& state) {
    auto const sc = SimplicialCategory::from_cube(
        CoherentCube(static_cast<std::size_t>(state.range(0))), 3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(hc_nerve(sc, 3));
    }
  }
  BENCHMARK(BM_HcNerveCube)->Arg(2)->Arg(3);

  void BM_AlgebraFunctoriality(benchmark::State& state) {
    auto const c = MatrixCategory(Ring::prime_field(2));
    auto const b = monoid_algebra(Monoid::cyclic(2), Ring::prime_field(2));
    auto const f = algebra_functor(c, b.algebra(), 3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(f.check_functoriality(static_cast<std::size_t>(state.range(0))));
    }
  }
  BENCHMARK(BM_AlgebraFunctoriality)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
