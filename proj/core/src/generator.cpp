#include "camopt/generator.hpp"

#include "camopt/cross_entropy.hpp"
#include "camopt/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <numbers>
#include <string>

namespace camopt {

namespace {

constexpr int kMaxSpeedDraws = 100;
constexpr int kMaxPlacementDraws = 100;

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec3 draw_offset(bool is_first, const GeneratorConfig& cfg, std::mt19937_64& rng)
{
    std::normal_distribution<double> offset(0.0, is_first ? cfg.first_offset_sigma : cfg.other_offset_sigma);
    const double x = offset(rng), y = offset(rng), z = offset(rng);
    return Vec3(x, y, z);
}

}  // namespace

void validate(const GeneratorConfig& cfg)
{
    auto range = [](double lo, double hi, const char* what) {
        if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
            throw InputError(std::string("generator: invalid range for ") + what);
    };
    if (cfg.n_debris < 1)
        throw InputError("generator: n_debris must be at least 1");
    range(cfg.protected_a_min, cfg.protected_a_max, "protected semi-major axis");
    if (!(cfg.protected_a_min > constants::earth_radius))
        throw InputError("generator: protected semi-major axis must exceed the Earth radius");
    range(0.0, cfg.protected_e_max, "protected eccentricity");
    if (!(cfg.protected_e_max < 1.0))
        throw InputError("generator: protected eccentricity must stay below 1");
    range(cfg.protected_radius_min, cfg.protected_radius_max, "protected radius");
    range(cfg.plane_angle_min, cfg.plane_angle_max, "plane angle");
    if (!(cfg.plane_angle_min > 0.0 && cfg.plane_angle_max < std::numbers::pi))
        throw InputError("generator: plane angles must lie in (0, pi)");
    range(cfg.debris_radius_min, cfg.debris_radius_max, "debris radius");
    if (!(cfg.protected_radius_min > 0.0) || !(cfg.debris_radius_min > 0.0))
        throw InputError("generator: radii must be positive");
    if (!(cfg.first_offset_sigma >= 0.0) || !(cfg.other_offset_sigma >= 0.0) || !(cfg.speed_sigma >= 0.0))
        throw InputError("generator: spreads must be non-negative");
    if (!(cfg.horizon_after_first_s > 0.0) || !(cfg.pos_sigma > 0.0) || !(cfg.screen_distance > 0.0))
        throw InputError("generator: horizon, pos_sigma and screen_distance must be positive");
    if (!std::isfinite(cfg.first_conjunction_epoch))
        throw InputError("generator: first conjunction epoch must be finite");
}

DebrisDraw construct_debris(const StateVector& protected_at_t, bool is_first, const GeneratorConfig& cfg,
                            std::mt19937_64& rng)
{
    const Vec3 offset = draw_offset(is_first, cfg, rng);
    return construct_debris(protected_at_t, offset, cfg, rng);
}

DebrisDraw construct_debris(const StateVector& protected_at_t, const Vec3& offset, const GeneratorConfig& cfg,
                            std::mt19937_64& rng)
{
    DebrisDraw draw;
    draw.plane_angle = uniform(rng, cfg.plane_angle_min, cfg.plane_angle_max);
    draw.offset = offset;

    const Vec3 position = protected_at_t.position + draw.offset;
    const Vec3 r_hat = position.normalized();
    const Vec3 n_p = protected_at_t.position.cross(protected_at_t.velocity).normalized();

    // Debris plane normal: orthogonal to r_hat, at angle alpha from n_p.
    const Vec3 n_perp = n_p - n_p.dot(r_hat) * r_hat;
    const double s = n_perp.norm();
    const Vec3 u = n_perp / s;
    const double c1 = std::clamp(std::cos(draw.plane_angle) / s, -1.0, 1.0);
    const double c2 = std::sqrt(1.0 - c1 * c1);
    const Vec3 n_d = c1 * u + c2 * r_hat.cross(u);

    draw.direction = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;

    const double v_p = protected_at_t.velocity.norm();
    const double escape2 = 2.0 * constants::mu / position.norm();
    std::normal_distribution<double> speed_dist(v_p, cfg.speed_sigma);
    double speed = speed_dist(rng);
    for (int k = 1; k < kMaxSpeedDraws && !(speed > 0.0 && speed * speed < escape2); ++k)
        speed = speed_dist(rng);
    if (!(speed > 0.0 && speed * speed < escape2))
        throw DomainError("generator: could not draw a bound debris speed");

    StateVector sv;
    sv.position = position;
    sv.velocity = draw.direction * speed * n_d.cross(r_hat).normalized();
    sv.epoch = protected_at_t.epoch;

    draw.object.elements = state_to_elements(sv);
    draw.object.radius = uniform(rng, cfg.debris_radius_min, cfg.debris_radius_max);
    draw.object.pos_sigma = cfg.pos_sigma;
    return draw;
}

DangerousSituation generate_situation(const GeneratorConfig& cfg, std::uint64_t index)
{
    validate(cfg);
    std::mt19937_64 rng(mix_seed(cfg.seed, index));

    DangerousSituation s;
    auto& prot = s.protected_object;
    prot.name = "PROTECTED";
    prot.elements.a = uniform(rng, cfg.protected_a_min, cfg.protected_a_max);
    prot.elements.e = uniform(rng, 0.0, cfg.protected_e_max);
    prot.elements.i = uniform(rng, 0.0, constants::two_pi);
    prot.elements.raan = uniform(rng, 0.0, constants::two_pi);
    prot.elements.argp = uniform(rng, 0.0, constants::two_pi);
    prot.elements.mean_anomaly = uniform(rng, 0.0, constants::two_pi);
    prot.elements.epoch = cfg.first_conjunction_epoch;
    prot.radius = uniform(rng, cfg.protected_radius_min, cfg.protected_radius_max);
    prot.pos_sigma = cfg.pos_sigma;

    const double t1 = cfg.first_conjunction_epoch;
    const double period_days = orbital_period(prot.elements.a) / constants::seconds_per_day;
    s.window = {t1 - period_days, t1 + cfg.horizon_after_first_s / constants::seconds_per_day};

    const KeplerianOrbit protected_orbit(prot.elements);
    const Trajectory protected_traj(prot.elements);
    ScreeningOptions screen;
    screen.screen_distance = cfg.screen_distance;

    // Near-equal periods repeat a pass half or one revolution earlier. A draw that is
    // already dangerous before t1 leaves no lead time, so it is redrawn; after
    // kMaxPlacementDraws the first acceptable draw is kept.
    const double pass_gap = 0.1 * period_days;
    auto passes_of = [&](const SpaceObject& d) {
        return find_conjunctions(protected_traj, prot, std::vector<SpaceObject>{d}, s.window, ProbabilityModel{},
                                 screen);
    };
    auto dangerous_before_t1 = [&](const std::vector<Conjunction>& passes) {
        return std::any_of(passes.begin(), passes.end(),
                           [&](const Conjunction& c) { return c.danger && c.epoch < t1 - pass_gap; });
    };

    // The first debris must also pass inside the screening distance at t1; only
    // that condition redraws its offset.
    const StateVector at_t1 = protected_orbit.state_at(t1);
    std::optional<SpaceObject> first_pick;
    Vec3 first_offset = draw_offset(true, cfg, rng);
    for (int attempt = 0; attempt < kMaxPlacementDraws; ++attempt) {
        DebrisDraw first = construct_debris(at_t1, first_offset, cfg, rng);
        first.object.name = "DEBRIS0";
        const auto passes = passes_of(first.object);
        const bool at_t1_pass = std::any_of(passes.begin(), passes.end(),
                                            [&](const Conjunction& c) { return std::abs(c.epoch - t1) < pass_gap; });
        if (!at_t1_pass) {
            first_offset = draw_offset(true, cfg, rng);
            continue;
        }
        const bool early = dangerous_before_t1(passes);
        if (!early || !first_pick)
            first_pick = std::move(first.object);
        if (!early)
            break;
    }
    if (!first_pick)
        throw DomainError("generator: could not place the first debris inside the screening distance");
    s.debris.push_back(std::move(*first_pick));

    for (int k = 1; k < cfg.n_debris; ++k) {
        const double t = uniform(rng, t1, s.window.end);
        const StateVector at_t = protected_orbit.state_at(t);
        const Vec3 offset = draw_offset(false, cfg, rng);
        std::optional<SpaceObject> pick;
        for (int attempt = 0; attempt < kMaxPlacementDraws; ++attempt) {
            DebrisDraw d = construct_debris(at_t, offset, cfg, rng);
            d.object.name = "DEBRIS" + std::to_string(k);
            const bool early = dangerous_before_t1(passes_of(d.object));
            if (!early || !pick)
                pick = std::move(d.object);
            if (!early)
                break;
        }
        s.debris.push_back(std::move(*pick));
    }
    return s;
}

}  // namespace camopt
