#include "camopt/bench.hpp"

#include "camopt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

namespace camopt {

namespace {

double percent(std::size_t count, std::size_t total)
{
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(total);
}

std::optional<std::size_t> column_of(const ResultMatrix& m, const std::string& name)
{
    const auto it = std::find(m.algorithms.begin(), m.algorithms.end(), name);
    if (it == m.algorithms.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - m.algorithms.begin());
}

double reward_of(const CellResult& c)
{
    return c.ok ? c.result.reward.total : -std::numeric_limits<double>::infinity();
}

std::string format_pct(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::vector<MetricsRow> compute_metrics(const ResultMatrix& matrix, const RewardConfig& reward,
                                        const MetricsConfig& cfg)
{
    const std::size_t n_sit = matrix.situations.size();
    const std::size_t n_alg = matrix.algorithms.size();
    if (matrix.cells.size() != n_sit)
        throw InputError("result matrix is not rectangular");
    for (const auto& row : matrix.cells)
        if (row.size() != n_alg)
            throw InputError("result matrix is not rectangular");

    const auto baseline_col = column_of(matrix, std::string(algorithm_id(Algorithm::Baseline)));
    const auto gs_col = column_of(matrix, std::string(algorithm_id(Algorithm::GridSearch)));

    std::vector<MetricsRow> rows(n_alg);
    for (std::size_t a = 0; a < n_alg; ++a) {
        std::size_t top = 0, leq = 0, oc_base = 0, oc_gs = 0;
        std::array<std::size_t, 3> pc{};

        for (std::size_t s = 0; s < n_sit; ++s) {
            const auto& cells = matrix.cells[s];
            const CellResult& cell = cells[a];

            double best = -std::numeric_limits<double>::infinity();
            for (const auto& c : cells)
                best = std::max(best, reward_of(c));
            const double gap = cfg.top_relative ? cfg.top_fraction * std::abs(best) : cfg.top_fraction;

            if (!cell.ok)
                continue;
            const double r = cell.result.reward.total;
            if (r >= best - gap)
                ++top;
            if (within_thresholds(cell.result.outcome(), reward))
                ++leq;
            if (baseline_col && r > reward_of(cells[*baseline_col]))
                ++oc_base;
            if (gs_col && r > reward_of(cells[*gs_col]))
                ++oc_gs;
            for (std::size_t k = 0; k < pc.size(); ++k)
                if (cell.result.total_probability <= cfg.pc_bounds[k])
                    ++pc[k];
        }

        MetricsRow& row = rows[a];
        row.algorithm = matrix.algorithms[a];
        row.top10_pct = percent(top, n_sit);
        row.leq_thr_pct = percent(leq, n_sit);
        if (baseline_col && *baseline_col != a)
            row.overcome_baseline_pct = percent(oc_base, n_sit);
        if (gs_col && *gs_col != a)
            row.overcome_gs_pct = percent(oc_gs, n_sit);
        row.pc_leq_1e4_pct = percent(pc[0], n_sit);
        row.pc_leq_2e4_pct = percent(pc[1], n_sit);
        row.pc_leq_1e3_pct = percent(pc[2], n_sit);
    }
    return rows;
}

std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t situation_index, Algorithm algorithm)
{
    return mix_seed(base_seed, situation_index * 16 + static_cast<std::size_t>(algorithm));
}

BenchmarkResult run_benchmark(const std::vector<std::pair<std::string, DangerousSituation>>& situations,
                              const std::vector<Algorithm>& algorithms, const BenchmarkConfig& cfg)
{
    if (situations.empty() || algorithms.empty())
        throw InputError("benchmark needs at least one situation and one algorithm");

    const std::size_t n_sit = situations.size(), n_alg = algorithms.size();
    BenchmarkResult out;
    out.matrix.cells.assign(n_sit, std::vector<CellResult>(n_alg));
    for (const auto& [name, _] : situations)
        out.matrix.situations.push_back(name);
    for (Algorithm a : algorithms)
        out.matrix.algorithms.emplace_back(algorithm_id(a));

    std::vector<std::unique_ptr<Environment>> envs(n_sit);
    std::vector<std::string> env_errors(n_sit);
    parallel_for(n_sit, [&](std::size_t s) {
        try {
            envs[s] = std::make_unique<Environment>(situations[s].second, cfg.reward, cfg.model, cfg.screening);
        } catch (const std::exception& e) {
            env_errors[s] = e.what();
        }
    });

    parallel_for(n_sit * n_alg, [&](std::size_t k) {
        const std::size_t s = k / n_alg, a = k % n_alg;
        CellResult& cell = out.matrix.cells[s][a];
        if (!envs[s]) {
            cell.error = env_errors[s];
            return;
        }
        SolverConfig solver = cfg.solver;
        solver.ce.rng_seed = cell_seed(cfg.solver.ce.rng_seed, s, algorithms[a]);
        try {
            Solution sol = solve(*envs[s], algorithms[a], solver);
            cell.ok = true;
            cell.maneuvers = std::move(sol.maneuvers);
            cell.result = std::move(sol.result);
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    });

    out.metrics = compute_metrics(out.matrix, cfg.reward, cfg.metrics);
    return out;
}

std::string metrics_csv(const std::vector<MetricsRow>& rows)
{
    std::string csv = "algorithm,top 10%,<= thr,o/c baseline,o/c GS,Pc <= 1e-4,Pc <= 2e-4,Pc <= 1e-3\n";
    auto opt = [](const std::optional<double>& v) { return v ? format_pct(*v) : std::string("-"); };
    for (const auto& r : rows) {
        csv += r.algorithm;
        csv += ',' + format_pct(r.top10_pct);
        csv += ',' + format_pct(r.leq_thr_pct);
        csv += ',' + opt(r.overcome_baseline_pct);
        csv += ',' + opt(r.overcome_gs_pct);
        csv += ',' + format_pct(r.pc_leq_1e4_pct);
        csv += ',' + format_pct(r.pc_leq_2e4_pct);
        csv += ',' + format_pct(r.pc_leq_1e3_pct);
        csv += '\n';
    }
    return csv;
}

}  // namespace camopt
