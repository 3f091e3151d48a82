#pragma once

#include "camopt/optimize.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace camopt {

struct MetricsConfig {
    /// A result is "top" when its reward is within this fraction of the best
    /// reward for the situation.
    double top_fraction = 0.1;
    /// Measure the top gap relative to |best reward| (true) or as an
    /// absolute reward difference (false).
    bool top_relative = true;
    std::array<double, 3> pc_bounds = {1e-4, 2e-4, 1e-3};
};

struct CellResult {
    bool ok = false;
    std::string error;
    std::vector<Maneuver> maneuvers;
    SessionResult result;
};

/// Rectangular (situation x algorithm) grid of results.
struct ResultMatrix {
    std::vector<std::string> situations;
    std::vector<std::string> algorithms;
    std::vector<std::vector<CellResult>> cells;  // [situation][algorithm]
};

/// Percentages over the situations. Comparisons against an algorithm that
/// is absent from the matrix, or against itself, are undefined (nullopt).
struct MetricsRow {
    std::string algorithm;
    double top10_pct = 0.0;
    double leq_thr_pct = 0.0;
    std::optional<double> overcome_baseline_pct;
    std::optional<double> overcome_gs_pct;
    double pc_leq_1e4_pct = 0.0;
    double pc_leq_2e4_pct = 0.0;
    double pc_leq_1e3_pct = 0.0;
};

std::vector<MetricsRow> compute_metrics(const ResultMatrix& matrix, const RewardConfig& reward,
                                        const MetricsConfig& cfg = {});

struct BenchmarkConfig {
    SolverConfig solver;
    RewardConfig reward;
    ProbabilityModel model;
    ScreeningOptions screening;
    MetricsConfig metrics;
};

struct BenchmarkResult {
    ResultMatrix matrix;
    std::vector<MetricsRow> metrics;
};

/// Seed used for the CE runs of one cell.
std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t situation_index, Algorithm algorithm);

/// Evaluates every (situation, algorithm) pair once. A failing cell is
/// recorded with ok = false and never aborts the sweep.
BenchmarkResult run_benchmark(const std::vector<std::pair<std::string, DangerousSituation>>& situations,
                              const std::vector<Algorithm>& algorithms, const BenchmarkConfig& cfg);

/// One header line plus one row per algorithm; undefined entries print "-".
std::string metrics_csv(const std::vector<MetricsRow>& rows);

}  // namespace camopt
