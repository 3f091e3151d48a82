#include "doctest.h"
#include "support.hpp"

#include "camopt/bench.hpp"

#include <algorithm>
#include <random>

using namespace camopt;

namespace {

CellResult cell(double reward, double pc = 0.0)
{
    CellResult c;
    c.ok = true;
    c.result.reward.total = reward;
    c.result.total_probability = pc;
    return c;
}

ResultMatrix matrix(const std::vector<std::string>& algs, const std::vector<std::vector<CellResult>>& cells)
{
    ResultMatrix m;
    m.algorithms = algs;
    m.cells = cells;
    for (std::size_t s = 0; s < cells.size(); ++s)
        m.situations.push_back("s" + std::to_string(s));
    return m;
}

const MetricsRow& row_of(const std::vector<MetricsRow>& rows, const std::string& alg)
{
    return *std::find_if(rows.begin(), rows.end(), [&](const MetricsRow& r) { return r.algorithm == alg; });
}

// Random matrix whose outcome fields are consistent with its rewards.
ResultMatrix random_matrix(std::mt19937_64& rng, std::size_t n_sit)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::string> algs;
    for (Algorithm a : kAllAlgorithms)
        algs.emplace_back(algorithm_id(a));
    std::vector<std::vector<CellResult>> cells(n_sit);
    const RewardConfig rc;
    for (auto& row : cells)
        for (std::size_t a = 0; a < algs.size(); ++a) {
            CellResult c;
            c.ok = u(rng) > 0.05;
            c.result.total_probability = 2e-4 * u(rng) * u(rng);
            c.result.fuel = 1.2 * u(rng);
            c.result.deviations.a = 250.0 * (u(rng) - 0.5);
            c.result.deviations.argp = 0.012 * u(rng);
            c.result.reward = total_reward(c.result.outcome(), rc);
            row.push_back(c);
        }
    return matrix(algs, cells);
}

}  // namespace

TEST_SUITE("bench")
{
    TEST_CASE("top 10 percent example")
    {
        const auto m = matrix({"a", "b", "c"}, {{cell(-1.0), cell(-1.05), cell(-2.0)}});
        const auto rows = compute_metrics(m, RewardConfig{});
        CHECK(row_of(rows, "a").top10_pct == 100.0);
        CHECK(row_of(rows, "b").top10_pct == 100.0);
        CHECK(row_of(rows, "c").top10_pct == 0.0);

        MetricsConfig absolute;
        absolute.top_relative = false;
        absolute.top_fraction = 0.01;
        CHECK(row_of(compute_metrics(m, RewardConfig{}, absolute), "b").top10_pct == 0.0);
    }

    TEST_CASE("overcome columns")
    {
        const auto m = matrix({"baseline", "gs", "gs-ce"},
                              {{cell(-2.0), cell(-1.5), cell(-1.5)}, {cell(-2.0), cell(-2.5), cell(-1.0)}});
        const auto rows = compute_metrics(m, RewardConfig{});
        CHECK_FALSE(row_of(rows, "baseline").overcome_baseline_pct.has_value());
        CHECK(row_of(rows, "baseline").overcome_gs_pct == 50.0);
        CHECK(row_of(rows, "gs").overcome_baseline_pct == 50.0);
        CHECK_FALSE(row_of(rows, "gs").overcome_gs_pct.has_value());
        CHECK(row_of(rows, "gs-ce").overcome_baseline_pct == 100.0);
        // Ties do not count as overcoming.
        CHECK(row_of(rows, "gs-ce").overcome_gs_pct == 50.0);

        const auto csv = metrics_csv(compute_metrics(matrix({"gs"}, {{cell(-1.0)}}), RewardConfig{}));
        CHECK(csv == "algorithm,top 10%,<= thr,o/c baseline,o/c GS,Pc <= 1e-4,Pc <= 2e-4,Pc <= 1e-3\n"
                     "gs,100.00,100.00,-,-,100.00,100.00,100.00\n");
    }

    TEST_CASE("probability columns")
    {
        const auto m = matrix({"x"}, {{cell(-1.0, 0.0)}, {cell(-1.0, 1e-4)}, {cell(-1.0, 1.5e-4)}, {cell(-1.0, 5e-3)}});
        const auto& r = compute_metrics(m, RewardConfig{})[0];
        CHECK(r.pc_leq_1e4_pct == 50.0);
        CHECK(r.pc_leq_2e4_pct == 75.0);
        CHECK(r.pc_leq_1e3_pct == 75.0);
    }

    TEST_CASE("failed cells fail every metric")
    {
        CellResult bad;
        bad.error = "boom";
        const auto m = matrix({"baseline", "gs"}, {{cell(-3.0), bad}});
        const auto rows = compute_metrics(m, RewardConfig{});
        const auto& gs = row_of(rows, "gs");
        CHECK(gs.top10_pct == 0.0);
        CHECK(gs.leq_thr_pct == 0.0);
        CHECK(gs.overcome_baseline_pct == 0.0);
        CHECK(gs.pc_leq_1e3_pct == 0.0);
        CHECK(row_of(rows, "baseline").overcome_gs_pct == 100.0);
        CHECK(row_of(rows, "baseline").top10_pct == 100.0);
    }

    TEST_CASE("non-rectangular matrix")
    {
        auto m = matrix({"a", "b"}, {{cell(-1.0)}});
        CHECK_THROWS_AS(compute_metrics(m, RewardConfig{}), InputError);
    }

    TEST_CASE("metric properties on random matrices")
    {
        std::mt19937_64 rng(31);
        const RewardConfig rc;
        for (int trial = 0; trial < 20; ++trial) {
            ResultMatrix m = random_matrix(rng, 12);
            const auto rows = compute_metrics(m, rc);
            for (const auto& r : rows)
                for (double v : {r.top10_pct, r.leq_thr_pct, r.pc_leq_1e4_pct, r.pc_leq_2e4_pct, r.pc_leq_1e3_pct}) {
                    CHECK(v >= 0.0);
                    CHECK(v <= 100.0);
                }

            for (std::size_t s = 0; s < m.cells.size(); ++s) {
                const auto& cells = m.cells[s];
                // The best cell of a situation is always top.
                const auto best = std::max_element(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
                    return (a.ok ? a.result.reward.total : -1e300) < (b.ok ? b.result.reward.total : -1e300);
                });
                if (best->ok) {
                    ResultMatrix single = m;
                    single.cells = {cells};
                    single.situations = {"s"};
                    const auto idx = static_cast<std::size_t>(best - cells.begin());
                    CHECK(compute_metrics(single, rc)[idx].top10_pct == 100.0);
                }
                for (const auto& c : cells)
                    if (c.ok && within_thresholds(c.result.outcome(), rc))
                        CHECK(c.result.reward.total >= -7.0);
            }

            // Situation order does not matter.
            ResultMatrix shuffled = m;
            std::shuffle(shuffled.cells.begin(), shuffled.cells.end(), rng);
            const auto again = compute_metrics(shuffled, rc);
            for (std::size_t a = 0; a < rows.size(); ++a) {
                CHECK(again[a].top10_pct == rows[a].top10_pct);
                CHECK(again[a].leq_thr_pct == rows[a].leq_thr_pct);
                CHECK(again[a].overcome_baseline_pct == rows[a].overcome_baseline_pct);
                CHECK(again[a].overcome_gs_pct == rows[a].overcome_gs_pct);
                CHECK(again[a].pc_leq_2e4_pct == rows[a].pc_leq_2e4_pct);
            }
            CHECK(metrics_csv(again) == metrics_csv(rows));
        }
    }

    TEST_CASE("benchmark run")
    {
        std::vector<std::pair<std::string, DangerousSituation>> sits{{"cross", test::crossing_situation(6600.0, 1.2, 20.0)}};
        BenchmarkConfig cfg;
        cfg.solver.grid.grid_points = 21;
        cfg.solver.ce.population = 20;
        cfg.solver.ce.elite_fraction = 0.2;
        cfg.solver.ce.iterations = 3;
        cfg.solver.ce.restarts = 1;
        const std::vector<Algorithm> algs{Algorithm::GridSearch, Algorithm::GsCe};
        const BenchmarkResult a = run_benchmark(sits, algs, cfg);
        REQUIRE(a.matrix.cells.size() == 1);
        REQUIRE(a.matrix.cells[0].size() == 2);
        CHECK(a.matrix.cells[0][0].ok);
        CHECK(a.matrix.cells[0][1].ok);
        CHECK(a.matrix.cells[0][1].result.reward.total >= a.matrix.cells[0][0].result.reward.total);
        CHECK(row_of(a.metrics, "gs-ce").top10_pct == 100.0);

        // Byte-stable output across repeated runs.
        const BenchmarkResult b = run_benchmark(sits, algs, cfg);
        CHECK(metrics_csv(a.metrics) == metrics_csv(b.metrics));
        CHECK(a.matrix.cells[0][1].maneuvers == b.matrix.cells[0][1].maneuvers);

        CHECK_THROWS_AS(run_benchmark({}, algs, cfg), InputError);
    }

    TEST_CASE("failing cells are recorded")
    {
        // The conjunction sits 30 s after the window start: the GS burn epoch is infeasible.
        DangerousSituation s = test::crossing_situation();
        s.window.start = 6600.0 - 30.0 / constants::seconds_per_day;
        const BenchmarkResult r = run_benchmark({{"tight", s}}, {Algorithm::GridSearch}, BenchmarkConfig{});
        CHECK_FALSE(r.matrix.cells[0][0].ok);
        CHECK_FALSE(r.matrix.cells[0][0].error.empty());
        CHECK(r.metrics[0].top10_pct == 0.0);
    }

    TEST_CASE("cell seeds differ across cells")
    {
        CHECK(cell_seed(1, 0, Algorithm::GsCe) != cell_seed(1, 1, Algorithm::GsCe));
        CHECK(cell_seed(1, 0, Algorithm::GsCe) != cell_seed(1, 0, Algorithm::CeInPlaneAuto));
    }
}
