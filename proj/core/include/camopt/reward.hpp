#pragma once

namespace camopt {

/// Signed element differences, maneuvered minus nominal. Angular entries
/// are wrapped to (-pi, pi].
struct Deviations {
    double a = 0.0;
    double e = 0.0;
    double i = 0.0;
    double raan = 0.0;
    double argp = 0.0;
    double mean_anomaly = 0.0;

    bool operator==(const Deviations&) const = default;
};

struct RewardThresholds {
    double collision_probability = 1e-4;
    double fuel = 1.0;    // m/s
    double dev_a = 200.0; // m
    double dev_e = 0.01;
    double dev_i = 0.01;
    double dev_raan = 0.01;
    double dev_argp = 0.01;
    double dev_mean_anomaly = 0.01;  // used only with penalize_mean_anomaly
};

struct RewardConfig {
    RewardThresholds thresholds;
    double below_slope_scale = 1.0;
    double above_slope_scale = 9.0;
    bool penalize_mean_anomaly = false;
};

/// The scalar outcome of a session that the reward is computed from.
struct Outcome {
    double total_probability = 0.0;
    double fuel = 0.0;
    Deviations deviations;
};

struct RewardBreakdown {
    double collision_probability = 0.0;
    double fuel = 0.0;
    double dev_a = 0.0;
    double dev_e = 0.0;
    double dev_i = 0.0;
    double dev_raan = 0.0;
    double dev_argp = 0.0;
    double dev_mean_anomaly = 0.0;
    double total = 0.0;

    bool operator==(const RewardBreakdown&) const = default;
};

/// Piecewise-linear penalty: -below*v/thr up to the threshold, then
/// -below - above*(v/thr - 1). Continuous and non-increasing in v.
double component_reward(double value, double threshold, double below_slope_scale = 1.0,
                        double above_slope_scale = 9.0);

RewardBreakdown total_reward(const Outcome& outcome, const RewardConfig& cfg);

/// True when every penalised component is at or below its threshold.
bool within_thresholds(const Outcome& outcome, const RewardConfig& cfg);

void validate(const RewardConfig& cfg);

}  // namespace camopt
