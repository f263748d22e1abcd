#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hardy/blocks.hpp"
#include "hardy/bridge.hpp"
#include "hardy/charformulas.hpp"
#include "hardy/hardyops.hpp"
#include "hardy/oracle.hpp"

using namespace hardy;

namespace {

Window random_weights(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> e(-4.0, 4.0);
  std::vector<double> v(n);
  for (double& x : v) x = std::exp2(e(rng));
  return Window(0, std::move(v));
}

void BM_RatioEvaluator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RatioProblem pr(random_weights(n, 1), random_weights(n, 2), random_weights(n, 3), 2.0, 3.0,
                  forms::gop);
  detail::RatioEvaluator ev(pr);
  const Window a = random_weights(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(ev.ratio(a.values()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RatioEvaluator)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_CharGop(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Window u = random_weights(n, 1), v = random_weights(n, 2), w = random_weights(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(char_gop(u, v, w, 3.0, 2.0));
}
BENCHMARK(BM_CharGop)->RangeMultiplier(4)->Range(8, 512);

void BM_CharAntigop(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Window u = random_weights(n, 1), v = random_weights(n, 2), w = random_weights(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(char_antigop(u, v, w, 0.5, 0.25));
}
BENCHMARK(BM_CharAntigop)->RangeMultiplier(4)->Range(8, 512);

void BM_BruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RatioProblem pr(random_weights(n, 1), random_weights(n, 2), random_weights(n, 3), 2.0, 3.0,
                  forms::gop);
  OracleConfig cfg;
  cfg.restarts = 8;
  cfg.iterations = 150;
  cfg.random_candidates = 16;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_constant(pr, cfg));
}
BENCHMARK(BM_BruteForce)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BlockPartition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Window w = random_weights(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(block_partition(w, 0));
}
BENCHMARK(BM_BlockPartition)->RangeMultiplier(4)->Range(8, 2048);

void BM_BridgeExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(0, 9), den(1, 6);
  auto rw = [&] {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
    return RationalWindow(0, std::move(v));
  };
  const auto u = rw(), v = rw(), w = rw(), a = rw();
  for (auto _ : state) benchmark::DoNotOptimize(bridge_check(u, v, w, a, 1.0, 2.0, BridgeForm::Gop));
}
BENCHMARK(BM_BridgeExact)->Arg(4)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
