#pragma once

#include "camopt/conjunction.hpp"
#include "camopt/objects.hpp"

#include <cstdint>
#include <random>

namespace camopt {

/// Sampling distributions for random dangerous situations. Ranges are
/// [lo, hi] of uniform draws unless noted.
struct GeneratorConfig {
    int n_debris = 10;

    double protected_a_min = 7.0e6;   // m
    double protected_a_max = 8.0e6;
    double protected_e_max = 0.003;
    double protected_radius_min = 0.3;  // m
    double protected_radius_max = 55.0;

    double plane_angle_min = 0.5;  // rad, between orbital planes
    double plane_angle_max = 2.64;
    double first_offset_sigma = 50.0;   // m per axis, first conjunction
    double other_offset_sigma = 500.0;  // m per axis, later conjunctions
    double speed_sigma = 0.05;          // m/s around the protected speed
    double debris_radius_min = 0.05;    // m
    double debris_radius_max = 1.0;

    double first_conjunction_epoch = 6600.0;  // days; protected elements refer to it
    double horizon_after_first_s = 86400.0;   // window end = first conjunction + this
    double pos_sigma = kDefaultPositionSigma;
    double screen_distance = 2000.0;          // first pass must fall inside

    std::uint64_t seed = 1;
};

void validate(const GeneratorConfig& cfg);

/// One debris draw together with the latent values it was built from.
struct DebrisDraw {
    SpaceObject object;
    double plane_angle = 0.0;   // rad
    Vec3 offset = Vec3::Zero(); // debris minus protected position at the conjunction, m
    int direction = 1;          // sign of the velocity along n_d x r_d
};

/// Builds a debris object that sits near `protected_at_t` at its epoch, in a
/// plane tilted by a random angle from the protected plane, moving
/// tangentially (velocity orthogonal to position).
DebrisDraw construct_debris(const StateVector& protected_at_t, bool is_first, const GeneratorConfig& cfg,
                            std::mt19937_64& rng);

/// Same construction around a given position offset (m); draws the remaining parameters.
DebrisDraw construct_debris(const StateVector& protected_at_t, const Vec3& offset, const GeneratorConfig& cfg,
                            std::mt19937_64& rng);

/// Random situation `index` of the stream seeded by cfg.seed. The protected
/// elements refer to the first conjunction epoch t1; the window is
/// [t1 - T, t1 + horizon]. Debris 0 meets the protected object at t1, the
/// others at uniform epochs in (t1, window end).
DangerousSituation generate_situation(const GeneratorConfig& cfg, std::uint64_t index = 0);

}  // namespace camopt
