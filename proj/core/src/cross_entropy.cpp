#include "camopt/cross_entropy.hpp"

#include "camopt/objects.hpp"
#include "camopt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace camopt {

int CrossEntropyConfig::elite_count() const
{
    return static_cast<int>(std::lround(population * elite_fraction));
}

void validate(const CrossEntropyConfig& cfg)
{
    if (cfg.population < 1)
        throw InputError("cross-entropy population must be positive");
    if (!(cfg.elite_fraction > 0.0 && cfg.elite_fraction < 1.0))
        throw InputError("cross-entropy elite_fraction must lie in (0, 1)");
    if (cfg.population * cfg.elite_fraction < 2.0)
        throw InputError("cross-entropy population * elite_fraction must be at least 2");
    if (cfg.iterations < 0 || cfg.restarts < 1)
        throw InputError("cross-entropy iterations must be >= 0 and restarts >= 1");
    if (!(cfg.learning_rate > 0.0 && cfg.learning_rate <= 1.0))
        throw InputError("cross-entropy learning_rate must lie in (0, 1]");
    if (!(cfg.sigma_decay > 0.0 && cfg.sigma_decay <= 1.0))
        throw InputError("cross-entropy sigma_decay must lie in (0, 1]");
    if (!(cfg.initial_sigma_fraction >= 0.0) || !(cfg.timing_sigma_fraction >= 0.0)
        || !(cfg.sigma_floor_fraction >= 0.0))
        throw InputError("cross-entropy sigma fractions must be non-negative");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    // splitmix64 over the combined value
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CrossEntropyResult maximize_cross_entropy(const CrossEntropyProblem& problem, const CrossEntropyConfig& cfg)
{
    validate(cfg);
    const std::size_t dim = problem.init.size();
    if (problem.sigma.size() != dim || problem.sigma_floor.size() != dim || problem.lower.size() != dim
        || problem.upper.size() != dim)
        throw InputError("cross-entropy problem vectors must share one dimension");

    const auto pop = static_cast<std::size_t>(cfg.population);
    const auto n_elite = static_cast<std::size_t>(cfg.elite_count());

    auto constrain = [&](std::vector<double>& x) {
        for (std::size_t j = 0; j < dim; ++j)
            x[j] = std::clamp(x[j], problem.lower[j], problem.upper[j]);
        if (problem.project)
            problem.project(x);
    };

    CrossEntropyResult result;
    result.best = problem.init;
    result.best_value = problem.objective(problem.init);
    result.final_mean = problem.init;
    result.evaluations = 1;

    std::vector<std::vector<double>> samples(pop, std::vector<double>(dim));
    std::vector<double> values(pop);
    std::vector<std::size_t> order(pop);

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        std::mt19937_64 rng(mix_seed(cfg.rng_seed, static_cast<std::uint64_t>(restart)));
        std::normal_distribution<double> normal(0.0, 1.0);

        std::vector<double> mean = problem.init;
        std::vector<double> sigma = problem.sigma;
        std::vector<double> floor(dim);
        for (std::size_t j = 0; j < dim; ++j)
            floor[j] = std::min(problem.sigma_floor[j], problem.sigma[j]);
        bool improved_here = false;

        for (int it = 0; it < cfg.iterations; ++it) {
            for (auto& x : samples) {
                for (std::size_t j = 0; j < dim; ++j)
                    x[j] = mean[j] + sigma[j] * normal(rng);
                constrain(x);
            }

            parallel_for(pop, [&](std::size_t k) { values[k] = problem.objective(samples[k]); });
            result.evaluations += pop;

            for (std::size_t k = 0; k < pop; ++k) {
                if (values[k] > result.best_value) {
                    result.best_value = values[k];
                    result.best = samples[k];
                    improved_here = true;
                }
            }

            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

            for (std::size_t j = 0; j < dim; ++j) {
                // Offsets from the current mean keep a degenerate elite set in place.
                double shift = 0.0;
                for (std::size_t e = 0; e < n_elite; ++e)
                    shift += samples[order[e]][j] - mean[j];
                shift /= static_cast<double>(n_elite);
                // Spread about the previous mean: sigma stays wide while the mean travels.
                double var = 0.0;
                for (std::size_t e = 0; e < n_elite; ++e) {
                    const double dx = samples[order[e]][j] - mean[j];
                    var += dx * dx;
                }
                const double elite_std = std::sqrt(var / static_cast<double>(n_elite));

                mean[j] += cfg.learning_rate * shift;
                const double blended = (1.0 - cfg.learning_rate) * sigma[j] + cfg.learning_rate * elite_std;
                sigma[j] = std::max(floor[j], cfg.sigma_decay * blended);
            }
            result.best_history.push_back(result.best_value);
        }

        if (improved_here || restart == 0)
            result.final_mean = mean;
    }
    return result;
}

}  // namespace camopt
