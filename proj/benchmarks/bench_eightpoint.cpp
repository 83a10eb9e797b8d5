#include <benchmark/benchmark.h>

#include "eightconic/campaign.hpp"
#include "eightconic/conic.hpp"
#include "eightconic/eightpoint.hpp"
#include "eightconic/errors.hpp"

using namespace eightconic;

namespace {

std::vector<CyclicConfig> sample_configs(std::size_t n) {
  std::vector<CyclicConfig> out;
  Xorshift64Star rng(1);
  while (out.size() < n) {
    CyclicConfig cfg = random_configuration(rng, GeneratorOptions{});
    try {
      eight_point_conic(cfg);
    } catch (const GeometryError&) {
      continue;
    }
    out.push_back(cfg);
  }
  return out;
}

void BM_ConicThroughFive(benchmark::State& state) {
  const auto configs = sample_configs(64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& c = configs[i++ % configs.size()];
    benchmark::DoNotOptimize(conic_through_five(c.vertex(0), c.vertex(1), c.vertex(2), c.vertex(3),
                                                circle_point(Rational(Integer(5), Integer(7)))));
  }
}
BENCHMARK(BM_ConicThroughFive);

void BM_EightPointConic(benchmark::State& state) {
  const auto configs = sample_configs(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eight_point_conic(configs[i++ % configs.size()]));
}
BENCHMARK(BM_EightPointConic);

void BM_Campaign(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_campaign(100, 42, GeneratorOptions{}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Campaign)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
