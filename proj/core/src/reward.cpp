#include "camopt/reward.hpp"

#include "camopt/objects.hpp"

#include <cmath>

namespace camopt {

double component_reward(double value, double threshold, double below_slope_scale, double above_slope_scale)
{
    if (value <= threshold)
        return 0.0 - below_slope_scale * (value / threshold);
    return -below_slope_scale - above_slope_scale * ((value - threshold) / threshold);
}

RewardBreakdown total_reward(const Outcome& outcome, const RewardConfig& cfg)
{
    const auto& t = cfg.thresholds;
    const auto& d = outcome.deviations;
    auto r = [&cfg](double v, double thr) {
        return component_reward(std::abs(v), thr, cfg.below_slope_scale, cfg.above_slope_scale);
    };

    RewardBreakdown b;
    b.collision_probability = r(outcome.total_probability, t.collision_probability);
    b.fuel = r(outcome.fuel, t.fuel);
    b.dev_a = r(d.a, t.dev_a);
    b.dev_e = r(d.e, t.dev_e);
    b.dev_i = r(d.i, t.dev_i);
    b.dev_raan = r(d.raan, t.dev_raan);
    b.dev_argp = r(d.argp, t.dev_argp);
    b.dev_mean_anomaly = cfg.penalize_mean_anomaly ? r(d.mean_anomaly, t.dev_mean_anomaly) : 0.0;
    b.total = b.collision_probability + b.fuel + b.dev_a + b.dev_e + b.dev_i + b.dev_raan + b.dev_argp
              + b.dev_mean_anomaly;
    return b;
}

bool within_thresholds(const Outcome& outcome, const RewardConfig& cfg)
{
    const auto& t = cfg.thresholds;
    const auto& d = outcome.deviations;
    bool ok = outcome.total_probability <= t.collision_probability && outcome.fuel <= t.fuel
              && std::abs(d.a) <= t.dev_a && std::abs(d.e) <= t.dev_e && std::abs(d.i) <= t.dev_i
              && std::abs(d.raan) <= t.dev_raan && std::abs(d.argp) <= t.dev_argp;
    if (cfg.penalize_mean_anomaly)
        ok = ok && std::abs(d.mean_anomaly) <= t.dev_mean_anomaly;
    return ok;
}

void validate(const RewardConfig& cfg)
{
    const auto& t = cfg.thresholds;
    for (double v : {t.collision_probability, t.fuel, t.dev_a, t.dev_e, t.dev_i, t.dev_raan, t.dev_argp,
                     t.dev_mean_anomaly}) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw InputError("reward thresholds must be positive");
    }
    if (!(cfg.below_slope_scale > 0.0) || !(cfg.above_slope_scale > 0.0))
        throw InputError("reward slope scales must be positive");
}

}  // namespace camopt
