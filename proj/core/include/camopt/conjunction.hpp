#pragma once

#include "camopt/objects.hpp"
#include "camopt/trajectory.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace camopt {

struct Conjunction {
    std::string debris_name;
    double miss_distance = 0.0;  // m
    double epoch = 0.0;          // TCA, days
    double probability = 0.0;
    bool danger = false;

    bool operator==(const Conjunction&) const = default;
};

/// Collision probability model. Only the short-term encounter-plane model
/// with isotropic Gaussian position errors exists today; the tag keeps file
/// formats open for others.
struct ProbabilityModel {
    enum class Method { EncounterPlaneGaussian };

    Method method = Method::EncounterPlaneGaussian;
    /// When set, override the per-object `pos_sigma` values.
    std::optional<double> sigma_protected;
    std::optional<double> sigma_debris;

    /// Per-axis standard deviation of the relative position.
    double combined_sigma(const SpaceObject& protected_obj, const SpaceObject& debris) const;
};

std::string to_string(ProbabilityModel::Method m);
ProbabilityModel::Method method_from_string(const std::string& s);

/// Mass of an isotropic 2-D Gaussian (per-axis sigma) inside a disc of
/// radius `hard_body_radius` whose centre is `miss_distance` away from the
/// mean. Evaluated by adaptive Gauss-Legendre quadrature over the radius
/// with the angular integral taken in closed form.
double collision_probability(double miss_distance, double hard_body_radius, double sigma);

/// 1 - prod(1 - p_i).
double total_collision_probability(std::span<const double> probabilities);
double total_collision_probability(std::span<const Conjunction> conjunctions);

struct ScreeningOptions {
    double screen_distance = 2000.0;   // m
    double samples_per_period = 200.0;
    double tca_tolerance_s = 1e-3;
    double duplicate_fraction = 0.1;   // of the protected period
    double danger_threshold = 1e-4;
};

/// Sampled positions and velocities on a screening grid.
struct TrackSamples {
    std::vector<Vec3> position;
    std::vector<Vec3> velocity;
};

/// Debris objects with their trajectories sampled once on a uniform grid
/// covering the window. Immutable after construction and safe to share
/// between threads.
class DebrisField {
public:
    DebrisField(std::vector<SpaceObject> debris, Window window, double protected_period_s,
                const ScreeningOptions& options);

    const std::vector<SpaceObject>& debris() const { return debris_; }
    const std::vector<KeplerianOrbit>& orbits() const { return orbits_; }
    const std::vector<double>& times() const { return times_; }
    const TrackSamples& track(std::size_t k) const { return tracks_[k]; }
    const Window& window() const { return window_; }
    double step_days() const { return step_; }
    double protected_period_s() const { return protected_period_s_; }
    const ScreeningOptions& options() const { return options_; }

private:
    std::vector<SpaceObject> debris_;
    std::vector<KeplerianOrbit> orbits_;
    Window window_;
    double protected_period_s_;
    ScreeningOptions options_;
    double step_ = 0.0;
    std::vector<double> times_;
    std::vector<TrackSamples> tracks_;
};

/// Samples `traj` on `times`. Entries with index < `reuse_count` are copied
/// from `reuse` instead of being recomputed.
TrackSamples sample_track(const Trajectory& traj, std::span<const double> times,
                          const TrackSamples* reuse = nullptr, std::size_t reuse_count = 0);

/// Screens a sampled protected trajectory against every debris of the field.
/// Returns one conjunction per pass below the screening distance, sorted by
/// TCA.
std::vector<Conjunction> find_conjunctions(const Trajectory& protected_traj,
                                           const SpaceObject& protected_obj,
                                           const TrackSamples& protected_samples,
                                           const DebrisField& field,
                                           const ProbabilityModel& model);

/// Convenience overload that builds the debris field itself.
std::vector<Conjunction> find_conjunctions(const Trajectory& protected_traj,
                                           const SpaceObject& protected_obj,
                                           const std::vector<SpaceObject>& debris, Window window,
                                           const ProbabilityModel& model,
                                           const ScreeningOptions& options = {});

}  // namespace camopt
