#include <benchmark/benchmark.h>

#include "weakhopf/axioms.hpp"
#include "weakhopf/coaction.hpp"
#include "weakhopf/constructions.hpp"
#include "weakhopf/dual.hpp"
#include "weakhopf/smash.hpp"

using namespace weakhopf;

namespace {

WeakHopf z2_pair() {
  return groupoid_algebra(Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)}),
                          Field::rationals());
}

WeakHopf z2_s3() {
  return groupoid_algebra(Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::symmetric3()}),
                          Field::rationals());
}

void BM_SuiteZ2Pair(benchmark::State& state) {
  const WeakHopf h = z2_pair();
  for (auto _ : state) benchmark::DoNotOptimize(check_weak_hopf(h));
}
BENCHMARK(BM_SuiteZ2Pair)->Unit(benchmark::kMillisecond);

// dimension 10, non-commutative component
void BM_SuiteZ2S3(benchmark::State& state) {
  const WeakHopf h = z2_s3();
  for (auto _ : state) benchmark::DoNotOptimize(check_weak_hopf(h));
}
BENCHMARK(BM_SuiteZ2S3)->Unit(benchmark::kMillisecond);

void BM_Dual(benchmark::State& state) {
  const WeakHopf h = z2_s3();
  for (auto _ : state) benchmark::DoNotOptimize(dual_weak_hopf(h));
}
BENCHMARK(BM_Dual)->Unit(benchmark::kMillisecond);

void BM_ScanUniformSubsets(benchmark::State& state) {
  const WeakHopf h = z2_pair();
  const CandidateSpec spec{CandidateSpec::Family::uniform_subsets, {}};
  for (auto _ : state) benchmark::DoNotOptimize(scan_rho_h(h, spec, RhoMode::partial));
}
BENCHMARK(BM_ScanUniformSubsets)->Unit(benchmark::kMillisecond);

void BM_SmashBuild(benchmark::State& state) {
  const WeakHopf h = z2_pair();
  const WeakHopf c = groupoid_algebra(Groupoid::from_group(FiniteGroup::cyclic(2)), Field::rationals());
  std::vector<Scalar> coords(h.space().dim(), Scalar::zero(h.space().field()));
  coords[0] = Scalar::one(h.space().field());
  const CoactionMap cm = rho_h_coaction(h, c.coalgebra(), Vector(h.space(), coords));
  const ComoduleBialgebra cb{h, c, c.antipode(), cm.rho()};
  for (auto _ : state) benchmark::DoNotOptimize(build_smash(cb, true));
}
BENCHMARK(BM_SmashBuild)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
