#include <benchmark/benchmark.h>

#include "fk/alexjones.hpp"
#include "fk/apoly.hpp"
#include "fk/cabling.hpp"
#include "fk/surgery.hpp"

namespace {

void BM_HTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fk::h_table(state.range(0)));
}
BENCHMARK(BM_HTable)->Arg(31)->Arg(61)->Arg(121)->Unit(benchmark::kMillisecond);

void BM_GenCable(benchmark::State& state) {
  fk::HTable t = fk::h_table(state.range(0) / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(fk::gen_cable(2, 5, state.range(0), t));
}
BENCHMARK(BM_GenCable)->Arg(105)->Arg(241)->Unit(benchmark::kMillisecond);

void BM_MRecursion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fk::m_recursion_for(state.range(0)));
}
BENCHMARK(BM_MRecursion)->Arg(9)->Arg(11)->Unit(benchmark::kSecond)->Iterations(1);

void BM_SolveForward(benchmark::State& state) {
  fk::MRecursion rec = fk::m_recursion_for(11);
  fk::FkSeries init = fk::gen_cable(2, 5, 129);
  for (auto _ : state) benchmark::DoNotOptimize(fk::solve_forward(rec, init, state.range(0)));
}
BENCHMARK(BM_SolveForward)->Arg(161)->Arg(241)->Unit(benchmark::kMillisecond);

void BM_HbarJones(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fk::hbar_jones(2, 11, int(state.range(0))));
}
BENCHMARK(BM_HbarJones)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_LaplaceZhat(benchmark::State& state) {
  fk::FkSeries f = fk::gen_cable(2, 5, 61);
  fk::SurgerySlope s = fk::parse_slope("-1/2");
  for (auto _ : state) benchmark::DoNotOptimize(fk::laplace_zhat(f, s, 300));
}
BENCHMARK(BM_LaplaceZhat)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
