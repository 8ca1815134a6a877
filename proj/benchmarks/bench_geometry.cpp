#include <benchmark/benchmark.h>

#include <filesystem>

#include "cgeom/checks.hpp"
#include "random_algebra.hpp"

namespace {

using namespace cgeom;

ManifoldDocument family_doc() {
  return load_manifold_file(std::filesystem::path(CGEOM_MANIFOLD_DIR) / "nk_family.geom");
}

void BM_ScalarArithmetic(benchmark::State& state) {
  const Scalar a = Scalar::parameter();
  const Scalar x = (a + Scalar(1)) / (a * a - Scalar(1));
  for (auto _ : state) {
    Scalar y = x * x + x / (a - Scalar(2));
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_ScalarArithmetic);

void BM_CurvatureRandom(benchmark::State& state) {
  const auto base = state.range(0) == 7 ? testing::BaseAlgebra::So3PlusH3PlusR : testing::BaseAlgebra::So3PlusR2;
  const FrameManifold m = testing::random_lie_manifold(base, 7);
  for (auto _ : state) {
    const Connection nabla = levi_civita(m);
    benchmark::DoNotOptimize(riemann(m, nabla));
  }
}
BENCHMARK(BM_CurvatureRandom)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FamilyStarRicci(benchmark::State& state) {
  const Analysis an = Analysis::of(family_doc());
  for (auto _ : state) benchmark::DoNotOptimize(star_ricci(an.manifold(), *an.contact, an.curvature));
}
BENCHMARK(BM_FamilyStarRicci)->Unit(benchmark::kMicrosecond);

void BM_FamilyAllChecks(benchmark::State& state) {
  const ManifoldDocument doc = family_doc();
  for (auto _ : state) benchmark::DoNotOptimize(run_checks(doc));
}
BENCHMARK(BM_FamilyAllChecks)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
