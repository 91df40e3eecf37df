#include <random>

#include <benchmark/benchmark.h>

#include "pitop/fixtures.hpp"
#include "pitop/hqft2d.hpp"
#include "pitop/moves.hpp"

using namespace pitop;

static void BM_CycloMul(benchmark::State& st) {
  CycloNum a = CycloNum::root(12, 1) + CycloNum(mpq_class(1, 3)), b = CycloNum::root(12, 5) - CycloNum(2);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

static void BM_EvaluateTrefoil(benchmark::State& st) {
  ThinCategory c = fixture_surgery_category();
  Diagram d = fixture_diagrams()[2].diagram;
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_F(d, c));
}
BENCHMARK(BM_EvaluateTrefoil);

static void BM_EvaluateAfterMoves(benchmark::State& st) {
  ThinCategory c = fixture_surgery_category();
  Diagram d = fixture_diagrams()[1].diagram;
  std::mt19937_64 rng(1);
  for (int k = 0; k < st.range(0); ++k) d = random_move(d, c, rng).result;
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_F(d, c));
  st.counters["events"] = static_cast<double>(d.events.size());
}
BENCHMARK(BM_EvaluateAfterMoves)->Arg(10)->Arg(40);

static void BM_TauLens(benchmark::State& st) {
  ThinCategory c = fixture_surgery_category();
  ModularData md = modular_data(c, 1);
  SurgeryPresentation p = builtin_presentation("lens", c, 1, 3);
  for (auto _ : st) benchmark::DoNotOptimize(tau(p, c, md).value);
}
BENCHMARK(BM_TauLens);

static void BM_VerifyCrossedAlgebra(benchmark::State& st) {
  ThinCategory c = pointlike_category(cyclic_bicharacter_tuple(static_cast<int>(st.range(0))));
  CrossedAlgebra a = crossed_algebra(c);
  for (auto _ : st) benchmark::DoNotOptimize(verify_crossed_algebra(a).ok());
}
BENCHMARK(BM_VerifyCrossedAlgebra)->Arg(3)->Arg(6);

static void BM_VerifyH4Pi(benchmark::State& st) {
  HopfAlgebraData h = sweedler_h4();
  GroupLikes gl = group_likes(h);
  PiCoalgebra a = build_A_pi(h, gl.group, conjugation_action(h, gl), ApiVariant::Plain);
  for (auto _ : st) benchmark::DoNotOptimize(verify_pi_coalgebra(a).ok());
}
BENCHMARK(BM_VerifyH4Pi);

BENCHMARK_MAIN();
