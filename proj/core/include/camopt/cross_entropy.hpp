#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace camopt {

struct CrossEntropyConfig {
    int population = 100;
    double elite_fraction = 0.1;
    int iterations = 30;
    /// Initial standard deviation of each dv scalar, as a fraction of dv_max.
    double initial_sigma_fraction = 0.2;
    /// Initial standard deviation of the burn epoch, as a fraction of the
    /// protected orbital period.
    double timing_sigma_fraction = 0.1;
    double learning_rate = 0.8;
    double sigma_decay = 0.98;
    /// Lower bound on each sigma, as a fraction of dv_max (or of the period
    /// for the epoch). Never larger than the initial sigma.
    double sigma_floor_fraction = 1e-4;
    int restarts = 2;
    std::uint64_t rng_seed = 0;

    int elite_count() const;
};

void validate(const CrossEntropyConfig& cfg);

/// Box-constrained maximisation problem for the cross-entropy method.
struct CrossEntropyProblem {
    std::vector<double> init;
    std::vector<double> sigma;        // initial per-coordinate sigma
    std::vector<double> sigma_floor;
    std::vector<double> lower;
    std::vector<double> upper;
    /// Optional extra projection applied after clamping to the box.
    std::function<void(std::vector<double>&)> project;
    /// Must be safe to call concurrently.
    std::function<double(const std::vector<double>&)> objective;
};

struct CrossEntropyResult {
    std::vector<double> best;
    double best_value = 0.0;
    /// Sampling mean at the end of the restart that produced `best`.
    std::vector<double> final_mean;
    /// Best-ever value after each iteration, restarts concatenated.
    std::vector<double> best_history;
    std::size_t evaluations = 0;
};

/// Runs `cfg.restarts` independent cross-entropy searches from `init` and
/// returns the best point ever evaluated, `init` included.
CrossEntropyResult maximize_cross_entropy(const CrossEntropyProblem& problem, const CrossEntropyConfig& cfg);

/// Deterministic 64-bit mixer for deriving independent seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace camopt
