#include <benchmark/benchmark.h>

#include "multiflag/classify.hpp"
#include "multiflag/distributions.hpp"
#include "multiflag/prolongation.hpp"
#include "multiflag/sampler.hpp"

using namespace multiflag;

// args: m, k
static void BM_gen_Y(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  std::size_t terms = 0;
  for (auto _ : state) {
    PolyField Y = gen_Y(k, m, k);
    terms = Y.term_count();
    benchmark::DoNotOptimize(terms);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_gen_Y)->Args({2, 3})->Args({2, 4})->Args({3, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_frame_Dk_evaluate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  const Frame f = frame_Dk(m, k);
  const ArmConfig c = sample_cartan(m, k, 1)[0];
  for (auto _ : state) benchmark::DoNotOptimize(f.evaluate(c.ambient()));
}
BENCHMARK(BM_frame_Dk_evaluate)->Args({2, 3})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMicrosecond);

static void BM_evaluate_Dk_numeric(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  const ArmConfig c = sample_cartan(m, k, 1)[0];
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_Dk(c));
}
BENCHMARK(BM_evaluate_Dk_numeric)->Args({2, 4})->Args({3, 6});

static void BM_cauchy_D1(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  const FlagSpec flag = build_flag(m, k);
  const ArmConfig c = sample_cartan(m, k, 2)[0];
  const Frame sub = independent_subframe(flag.member(1), c.ambient());
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_char_at(sub, c.ambient()));
}
BENCHMARK(BM_cauchy_D1)->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_classify(benchmark::State& state) {
  // depth-2 path for k = 4, depth-1 path for k = 6
  const RvtWord w = parse_word(state.range(0) == 4 ? "RVT_0T_{01}" : "RVTRVT");
  const ArmConfig c = sample_in_class({w, 3, 3, kDefaultMargin, 1})[0];
  for (auto _ : state) benchmark::DoNotOptimize(classify(c));
}
BENCHMARK(BM_classify)->Arg(4)->Arg(6);

static void BM_sample_in_class(benchmark::State& state) {
  const RvtWord w = parse_word("RVTRVT");
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_in_class({w, 3, seed++, kDefaultMargin, 1}));
}
BENCHMARK(BM_sample_in_class);

static void BM_verify_pushforward(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  const ArmConfig c = sample_cartan(m, k + 1, 4)[0];
  verify_pushforward(c);  // warm the frame cache
  for (auto _ : state) benchmark::DoNotOptimize(verify_pushforward(c));
}
BENCHMARK(BM_verify_pushforward)->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
