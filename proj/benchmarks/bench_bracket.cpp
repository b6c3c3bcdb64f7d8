#include <benchmark/benchmark.h>

#include <skein/bracket.hpp>
#include <skein/catalog.hpp>
#include <skein/cocycle.hpp>

using namespace skein;

namespace {

// 0: 4_1 (4), 1: 6_3 (6), 2: 4_1#6_3 (10), 3: 4_1#6_3#4_1 (14), 4: 4_1#6_3#6_3 (16)
LongDiagram input(int which) {
  const auto& c = Catalog::standard();
  const auto& fig8 = c.get("4_1").diagram;
  const auto& six = c.get("6_3").diagram;
  const auto& sum = c.get("4_1#6_3").diagram;
  switch (which) {
    case 0: return fig8;
    case 1: return six;
    case 2: return sum;
    case 3: return connected_sum(sum, fig8);
    default: return connected_sum(sum, six);
  }
}

void bracket(benchmark::State& state, EvalMethod method) {
  const auto d = input(static_cast<int>(state.range(0)));
  const EvalOptions opts{method, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, opts));
  state.counters["crossings"] = d.size();
}

void BM_Naive(benchmark::State& state) { bracket(state, EvalMethod::naive); }
void BM_Contraction(benchmark::State& state) { bracket(state, EvalMethod::contraction); }

void BM_SingularWall(benchmark::State& state) {
  const auto d = make_singular(input(static_cast<int>(state.range(0))), 0);
  for (auto _ : state) benchmark::DoNotOptimize(singular_bracket(d));
}

void BM_LoopCross(benchmark::State& state) {
  const auto loop = Catalog::standard().scenario("loop_41_63");
  for (auto _ : state) benchmark::DoNotOptimize(cross_of_loop(loop));
}

}  // namespace

BENCHMARK(BM_Naive)->ArgsProduct({{0, 1, 2, 3, 4}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Naive)->Args({4, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Contraction)->ArgsProduct({{0, 1, 2, 3, 4}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularWall)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LoopCross)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
