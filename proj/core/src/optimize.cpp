#include "camopt/optimize.hpp"

#include "camopt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace camopt {

namespace {

constexpr double kAutoTimingMarginS = 60.0;
// Keeps projected CE samples strictly inside the fuel ball despite rounding.
constexpr double kBallShrink = 1.0 - 1e-12;

struct GridPick {
    double value = 0.0;
    SessionResult result;
};

// Evaluates `prior + {s * direction at epoch}` for every grid value and
// returns the best one. Ties go to the smaller |s|, then to grid order.
GridPick best_on_grid(const Environment& env, const std::vector<Maneuver>& prior, const Vec3& direction,
                      double epoch, const std::vector<double>& grid)
{
    std::vector<SessionResult> results(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) {
        std::vector<Maneuver> plan = prior;
        plan.push_back({grid[k] * direction, epoch});
        results[k] = env.run(plan);
    });

    std::size_t best = 0;
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double r = results[k].reward.total, rb = results[best].reward.total;
        if (r > rb || (r == rb && std::abs(grid[k]) < std::abs(grid[best])))
            best = k;
    }
    return {grid[best], std::move(results[best])};
}

double burn_epoch_before(const Conjunction& c, const Environment& env, double periods)
{
    return c.epoch - periods * env.protected_period_days();
}

Solution nominal_solution(const Environment& env)
{
    return {{}, env.nominal(), {}};
}

}  // namespace

std::size_t dimension(Direction d)
{
    switch (d) {
    case Direction::InTrack:
        return 1;
    case Direction::InPlane:
        return 2;
    case Direction::OutOfPlane:
        return 3;
    }
    return 0;
}

void validate(const GridSearchConfig& cfg)
{
    if (!(cfg.dv_max > 0.0) || !std::isfinite(cfg.dv_max))
        throw InputError("grid search dv_max must be positive");
    if (cfg.grid_points < 1 || cfg.grid_points % 2 == 0)
        throw InputError("grid search grid_points must be a positive odd number");
    if (cfg.periods_before < 0)
        throw InputError("grid search periods_before must be non-negative");
    if (cfg.max_maneuvers < 1)
        throw InputError("grid search max_maneuvers must be positive");
}

Maneuver decode(const ManeuverParam& param, const Trajectory& base, double dv_max)
{
    if (param.values.size() != dimension(param.direction))
        throw InputError("maneuver parameter has the wrong number of scalars");
    const OrbitFrame f = orbit_frame(base.state_at(param.epoch));

    Vec3 dv = param.values[0] * f.in_track;
    if (param.values.size() > 1)
        dv += param.values[1] * f.radial_in_plane;
    if (param.values.size() > 2)
        dv += param.values[2] * f.cross_track;

    if (dv.norm() > dv_max * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "decoded |dv| = " << dv.norm() << " exceeds dv_max = " << dv_max;
        throw DomainError(os.str());
    }
    return {dv, param.epoch};
}

std::vector<double> symmetric_grid(double limit, int points)
{
    if (points < 1 || points % 2 == 0)
        throw InputError("grid size must be a positive odd number");
    std::vector<double> grid(static_cast<std::size_t>(points));
    const int half = points / 2;
    for (int k = 0; k < points; ++k)
        grid[static_cast<std::size_t>(k)] = (half == 0) ? 0.0 : limit * static_cast<double>(k - half) / half;
    return grid;
}

namespace {

struct GeneralPick {
    Solution solution;
    double scalar = 0.0;  // in-track dv of the chosen grid point
};

GeneralPick general_pick(const Environment& env, const GridSearchConfig& cfg)
{
    validate(cfg);
    const auto target = env.first_dangerous_conjunction();
    if (!target)
        return {nominal_solution(env), 0.0};

    const double epoch = burn_epoch_before(*target, env, cfg.periods_before + 0.5);
    if (epoch < env.situation().window.start)
        throw DomainError("grid search: burn epoch precedes the simulation window");

    const Trajectory nominal = env.trajectory({});
    const Vec3 along = orbit_frame(nominal.state_at(epoch)).in_track;
    GridPick pick = best_on_grid(env, {}, along, epoch, symmetric_grid(cfg.dv_max, cfg.grid_points));

    GeneralPick out;
    out.scalar = pick.value;
    out.solution.maneuvers.push_back({pick.value * along, epoch});
    out.solution.result = std::move(pick.result);
    return out;
}

}  // namespace

Solution grid_search_general(const Environment& env, const GridSearchConfig& cfg)
{
    return general_pick(env, cfg).solution;
}

Solution grid_search_baseline(const Environment& env, const GridSearchConfig& cfg)
{
    validate(cfg);
    const double pass_gap = env.screening().duplicate_fraction * env.protected_period_days();
    const double window_start = env.situation().window.start;

    std::vector<Maneuver> applied;
    double last_target = -std::numeric_limits<double>::infinity();
    SessionResult current = env.nominal();

    for (int round = 0; round < cfg.max_maneuvers; ++round) {
        const double remaining = cfg.dv_max - total_fuel(applied);
        if (!(remaining > 0.0))
            break;
        const double earliest_burn = applied.empty() ? window_start : applied.back().epoch;

        // Earliest dangerous conjunction not handled yet with a feasible burn time.
        const Conjunction* target = nullptr;
        double epoch = 0.0;
        for (const auto& c : current.conjunctions) {
            if (!c.danger || c.epoch <= last_target + pass_gap)
                continue;
            const double t = burn_epoch_before(c, env, cfg.periods_before + 0.5);
            if (t < earliest_burn)
                continue;
            target = &c;
            epoch = t;
            break;
        }
        if (target == nullptr)
            break;
        last_target = target->epoch;

        const Trajectory base = env.trajectory(applied);
        const Vec3 along = orbit_frame(base.state_at(epoch)).in_track;
        GridPick pick = best_on_grid(env, applied, along, epoch, symmetric_grid(remaining, cfg.grid_points));
        applied.push_back({pick.value * along, epoch});
        current = std::move(pick.result);
    }

    if (applied.empty())
        return nominal_solution(env);
    return {applied, std::move(current), {}};
}

TimingBounds auto_timing_bounds(const Environment& env)
{
    const auto target = env.first_dangerous_conjunction();
    if (!target)
        throw DomainError("auto timing: no dangerous conjunction");
    TimingBounds b{env.situation().window.start, target->epoch - kAutoTimingMarginS / constants::seconds_per_day};
    if (!(b.hi > b.lo))
        throw DomainError("auto timing: first dangerous conjunction is too close to the window start");
    return b;
}

Solution cross_entropy(const Environment& env, const ManeuverParam& init, const CrossEntropyConfig& cfg,
                       double dv_max)
{
    validate(cfg);
    const std::size_t n = dimension(init.direction);
    if (init.values.size() != n)
        throw InputError("cross-entropy init has the wrong number of scalars");
    const bool auto_timing = init.timing == Timing::Auto;

    TimingBounds bounds{init.epoch, init.epoch};
    if (auto_timing)
        bounds = auto_timing_bounds(env);

    const Trajectory base = env.trajectory({});
    const double period_days = env.protected_period_days();

    CrossEntropyProblem problem;
    problem.init = init.values;
    problem.sigma.assign(n, cfg.initial_sigma_fraction * dv_max);
    problem.sigma_floor.assign(n, cfg.sigma_floor_fraction * dv_max);
    problem.lower.assign(n, -dv_max);
    problem.upper.assign(n, dv_max);
    if (auto_timing) {
        problem.init.push_back(std::clamp(init.epoch, bounds.lo, bounds.hi));
        problem.sigma.push_back(cfg.timing_sigma_fraction * period_days);
        problem.sigma_floor.push_back(cfg.sigma_floor_fraction * period_days);
        problem.lower.push_back(bounds.lo);
        problem.upper.push_back(bounds.hi);
    }
    problem.project = [n, dv_max](std::vector<double>& x) {
        double norm2 = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            norm2 += x[j] * x[j];
        const double radius = dv_max * kBallShrink;
        if (norm2 > radius * radius) {
            const double scale = radius / std::sqrt(norm2);
            for (std::size_t j = 0; j < n; ++j)
                x[j] *= scale;
        }
    };

    auto to_param = [&](const std::vector<double>& x) {
        ManeuverParam p = init;
        p.values.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
        if (auto_timing)
            p.epoch = x[n];
        return p;
    };
    problem.objective = [&](const std::vector<double>& x) {
        try {
            const Maneuver m = decode(to_param(x), base, dv_max);
            return env.run(std::span<const Maneuver>(&m, 1)).reward.total;
        } catch (const std::exception&) {
            return -std::numeric_limits<double>::infinity();
        }
    };

    CrossEntropyResult ce = maximize_cross_entropy(problem, cfg);

    Solution sol;
    sol.maneuvers.push_back(decode(to_param(ce.best), base, dv_max));
    sol.result = env.run(sol.maneuvers);
    sol.best_history = std::move(ce.best_history);
    return sol;
}

Solution gs_ce(const Environment& env, const GridSearchConfig& gs_cfg, const CrossEntropyConfig& ce_cfg)
{
    GeneralPick gs = general_pick(env, gs_cfg);
    if (gs.solution.maneuvers.empty())
        return std::move(gs.solution);

    // decode({s, 0}) reproduces the grid-search burn bit for bit, so the CE
    // starting point scores exactly the GS reward.
    ManeuverParam init;
    init.direction = Direction::InPlane;
    init.timing = Timing::Fixed;
    init.values = {gs.scalar, 0.0};
    init.epoch = gs.solution.maneuvers.front().epoch;
    return cross_entropy(env, init, ce_cfg, gs_cfg.dv_max);
}

std::string_view algorithm_id(Algorithm a)
{
    switch (a) {
    case Algorithm::Baseline:
        return "baseline";
    case Algorithm::GridSearch:
        return "gs";
    case Algorithm::GsCe:
        return "gs-ce";
    case Algorithm::CeInTrackHalf:
        return "ce-in-track-half";
    case Algorithm::CeInPlaneHalf:
        return "ce-in-plane-half";
    case Algorithm::CeOutOfPlaneHalf:
        return "ce-out-of-plane-half";
    case Algorithm::CeInTrackAuto:
        return "ce-in-track-auto";
    case Algorithm::CeInPlaneAuto:
        return "ce-in-plane-auto";
    case Algorithm::CeOutOfPlaneAuto:
        return "ce-out-of-plane-auto";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view id)
{
    for (Algorithm a : kAllAlgorithms)
        if (algorithm_id(a) == id)
            return a;
    throw InputError("unknown algorithm '" + std::string(id) + "'");
}

Solution solve(const Environment& env, Algorithm algorithm, const SolverConfig& cfg)
{
    switch (algorithm) {
    case Algorithm::Baseline:
        return grid_search_baseline(env, cfg.grid);
    case Algorithm::GridSearch:
        return grid_search_general(env, cfg.grid);
    case Algorithm::GsCe:
        return gs_ce(env, cfg.grid, cfg.ce);
    default:
        break;
    }

    const auto target = env.first_dangerous_conjunction();
    if (!target)
        return nominal_solution(env);

    ManeuverParam init;
    switch (algorithm) {
    case Algorithm::CeInTrackHalf:
    case Algorithm::CeInTrackAuto:
        init.direction = Direction::InTrack;
        break;
    case Algorithm::CeInPlaneHalf:
    case Algorithm::CeInPlaneAuto:
        init.direction = Direction::InPlane;
        break;
    default:
        init.direction = Direction::OutOfPlane;
        break;
    }
    init.values.assign(dimension(init.direction), 0.0);
    init.epoch = burn_epoch_before(*target, env, 0.5);

    const bool auto_timing = algorithm == Algorithm::CeInTrackAuto || algorithm == Algorithm::CeInPlaneAuto
                             || algorithm == Algorithm::CeOutOfPlaneAuto;
    init.timing = auto_timing ? Timing::Auto : Timing::Fixed;
    if (!auto_timing && init.epoch < env.situation().window.start)
        throw DomainError("cross-entropy: burn epoch precedes the simulation window");

    return cross_entropy(env, init, cfg.ce, cfg.grid.dv_max);
}

}  // namespace camopt
