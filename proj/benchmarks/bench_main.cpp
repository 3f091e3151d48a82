#include "camopt/env.hpp"
#include "camopt/generator.hpp"
#include "camopt/optimize.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace camopt;

static void BM_SolveKepler(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> m(-10.0, 10.0), e(0.0, 0.9);
    std::vector<std::pair<double, double>> inputs(1024);
    for (auto& x : inputs)
        x = {m(rng), e(rng)};
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& [mm, ee] = inputs[k++ & 1023];
        benchmark::DoNotOptimize(solve_kepler(mm, ee));
    }
}
BENCHMARK(BM_SolveKepler);

static void BM_CollisionProbability(benchmark::State& state)
{
    double d = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(collision_probability(d, 20.0, 141.4));
        d = d > 500.0 ? 0.0 : d + 1.3;
    }
}
BENCHMARK(BM_CollisionProbability);

static void BM_SessionRun(benchmark::State& state)
{
    const Environment env(generate_situation(GeneratorConfig{}, 0));
    const auto target = env.first_dangerous_conjunction();
    const double epoch = target ? target->epoch - 0.5 * env.protected_period_days() : env.situation().window.start;
    const std::vector<Maneuver> m{{Vec3(0.05, -0.02, 0.01), epoch}};
    for (auto _ : state)
        benchmark::DoNotOptimize(env.run(m));
}
BENCHMARK(BM_SessionRun);

static void BM_EnvironmentBuild(benchmark::State& state)
{
    const DangerousSituation s = generate_situation(GeneratorConfig{}, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(Environment(s));
}
BENCHMARK(BM_EnvironmentBuild);

static void BM_GridSearch(benchmark::State& state)
{
    const Environment env(generate_situation(GeneratorConfig{}, 0));
    for (auto _ : state)
        benchmark::DoNotOptimize(grid_search_general(env, GridSearchConfig{}));
}
BENCHMARK(BM_GridSearch)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
