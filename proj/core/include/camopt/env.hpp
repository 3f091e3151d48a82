#pragma once

#include "camopt/conjunction.hpp"
#include "camopt/objects.hpp"
#include "camopt/reward.hpp"
#include "camopt/trajectory.hpp"

#include <optional>
#include <span>
#include <vector>

namespace camopt {

struct SessionResult {
    double total_probability = 0.0;
    double fuel = 0.0;
    Deviations deviations;
    std::vector<Conjunction> conjunctions;
    RewardBreakdown reward;

    Outcome outcome() const { return {total_probability, fuel, deviations}; }
    bool operator==(const SessionResult&) const = default;
};

/// Element-wise differences; angular entries wrapped to (-pi, pi]. Throws
/// InputError if the epochs differ.
Deviations deviations(const OrbitalElements& maneuvered, const OrbitalElements& nominal);

/// Simulation environment for one dangerous situation. Debris tracks and
/// the nominal protected track are sampled once at construction; `run` is
/// const and may be called concurrently.
class Environment {
public:
    explicit Environment(DangerousSituation situation, RewardConfig reward = {}, ProbabilityModel model = {},
                         ScreeningOptions screening = {});

    /// Throws InputError if a maneuver lies outside the window.
    SessionResult run(std::span<const Maneuver> maneuvers) const;

    Trajectory trajectory(std::span<const Maneuver> maneuvers) const;

    const SessionResult& nominal() const { return nominal_; }
    const DangerousSituation& situation() const { return situation_; }
    const RewardConfig& reward_config() const { return reward_; }
    const ProbabilityModel& probability_model() const { return model_; }
    const ScreeningOptions& screening() const { return field_.options(); }
    double protected_period_s() const { return period_s_; }
    double protected_period_days() const;

    /// Earliest dangerous conjunction of the nominal (no-maneuver) session.
    std::optional<Conjunction> first_dangerous_conjunction() const;

private:
    DangerousSituation situation_;
    RewardConfig reward_;
    ProbabilityModel model_;
    double period_s_;
    DebrisField field_;
    Trajectory nominal_traj_;
    TrackSamples nominal_samples_;
    OrbitalElements nominal_final_;
    SessionResult nominal_;
};

SessionResult run_session(const DangerousSituation& situation, std::span<const Maneuver> maneuvers,
                          const RewardConfig& reward = {}, const ProbabilityModel& model = {},
                          const ScreeningOptions& screening = {});

}  // namespace camopt
