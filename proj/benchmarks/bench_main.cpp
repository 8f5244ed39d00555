#include <benchmark/benchmark.h>

#include "kripkelab/kripkelab.hpp"

namespace {

using namespace kripkelab;

void BM_EnumerateLabeled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_frame(n, false, [&](const Frame&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateLabeled)->DenseRange(3, 5);

void BM_EnumerateDedup(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frames(n, true).size());
}
BENCHMARK(BM_EnumerateDedup)->DenseRange(3, 5);

void BM_FrameValidGlSchema(benchmark::State& state) {
  const Frame chain = make_frame(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const Formula f = gl_schema();
  for (auto _ : state) benchmark::DoNotOptimize(is_valid(frame_valid(chain, f)));
}
BENCHMARK(BM_FrameValidGlSchema);

void BM_ForcesDeepFormula(benchmark::State& state) {
  const Frame fr = make_frame(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
  Valuation v;
  v.assign("p", WorldSet::of({3}));
  v.assign("q", WorldSet::of({2, 4}));
  const Model m(fr, v);
  const Formula f = parse("((p->q)->p)->p | ~~(p|~p) & ((p->q)|(q->p))");
  for (auto _ : state) benchmark::DoNotOptimize(truth_set(m, f));
}
BENCHMARK(BM_ForcesDeepFormula);

void BM_CorrespondenceGl(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_correspondence(gl_schema(), FrameCondition::Lin(), n, true).total_mismatches());
  }
}
BENCHMARK(BM_CorrespondenceGl)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CollapseCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(collapse_check(4).ok());
}
BENCHMARK(BM_CollapseCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
