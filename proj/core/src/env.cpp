#include "camopt/env.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace camopt {

namespace {

ScreeningOptions with_danger_threshold(ScreeningOptions opts, const RewardConfig& reward)
{
    opts.danger_threshold = reward.thresholds.collision_probability;
    return opts;
}

DangerousSituation validated(DangerousSituation s)
{
    validate(s);
    return s;
}

// Both sides go through the same state conversion so that equivalent element
// sets (e.g. i and 2*pi - i with the node flipped) compare equal.
OrbitalElements final_elements(const Trajectory& traj, double epoch)
{
    return state_to_elements(traj.state_at(epoch));
}

}  // namespace

Deviations deviations(const OrbitalElements& maneuvered, const OrbitalElements& nominal)
{
    if (maneuvered.epoch != nominal.epoch)
        throw InputError("deviations: element sets refer to different epochs");
    Deviations d;
    d.a = maneuvered.a - nominal.a;
    d.e = maneuvered.e - nominal.e;
    d.i = wrap_pi(maneuvered.i - nominal.i);
    d.raan = wrap_pi(maneuvered.raan - nominal.raan);
    d.argp = wrap_pi(maneuvered.argp - nominal.argp);
    d.mean_anomaly = wrap_pi(maneuvered.mean_anomaly - nominal.mean_anomaly);
    return d;
}

Environment::Environment(DangerousSituation situation, RewardConfig reward, ProbabilityModel model,
                         ScreeningOptions screening)
    : situation_(validated(std::move(situation))),
      reward_(reward),
      model_(model),
      period_s_(orbital_period(situation_.protected_object.elements.a)),
      field_(situation_.debris, situation_.window, period_s_, with_danger_threshold(screening, reward)),
      nominal_traj_(situation_.protected_object.elements),
      nominal_samples_(sample_track(nominal_traj_, field_.times())),
      nominal_final_(final_elements(nominal_traj_, situation_.window.end))
{
    validate(reward_);
    nominal_ = run({});
}

double Environment::protected_period_days() const
{
    return period_s_ / constants::seconds_per_day;
}

Trajectory Environment::trajectory(std::span<const Maneuver> maneuvers) const
{
    for (const auto& m : maneuvers) {
        if (!situation_.window.contains(m.epoch)) {
            std::ostringstream os;
            os.precision(12);
            os << "maneuver epoch " << m.epoch << " outside window [" << situation_.window.start << ", "
               << situation_.window.end << "]";
            throw InputError(os.str());
        }
        if (!m.dv.allFinite())
            throw InputError("maneuver dv must be finite");
    }
    return Trajectory(situation_.protected_object.elements, maneuvers);
}

SessionResult Environment::run(std::span<const Maneuver> maneuvers) const
{
    const Trajectory traj = trajectory(maneuvers);

    // Samples before the first burn coincide with the nominal track.
    const auto& times = field_.times();
    const auto reuse = static_cast<std::size_t>(
        std::lower_bound(times.begin(), times.end(), traj.first_burn_epoch()) - times.begin());
    const TrackSamples samples = sample_track(traj, times, &nominal_samples_, reuse);

    SessionResult r;
    r.conjunctions = find_conjunctions(traj, situation_.protected_object, samples, field_, model_);
    r.total_probability = total_collision_probability(std::span<const Conjunction>(r.conjunctions));
    for (const auto& m : maneuvers)
        r.fuel += m.dv.norm();
    r.deviations = deviations(final_elements(traj, situation_.window.end), nominal_final_);
    r.reward = total_reward(r.outcome(), reward_);
    return r;
}

std::optional<Conjunction> Environment::first_dangerous_conjunction() const
{
    for (const auto& c : nominal_.conjunctions)
        if (c.danger)
            return c;
    return std::nullopt;
}

SessionResult run_session(const DangerousSituation& situation, std::span<const Maneuver> maneuvers,
                          const RewardConfig& reward, const ProbabilityModel& model,
                          const ScreeningOptions& screening)
{
    return Environment(situation, reward, model, screening).run(maneuvers);
}

}  // namespace camopt
