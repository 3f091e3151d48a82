#pragma once

#include "camopt/objects.hpp"
#include "camopt/orbit.hpp"

#include <span>
#include <vector>

namespace camopt {

/// position unchanged, velocity += dv. Throws InputError when the epochs
/// differ by more than ~0.1 ms.
StateVector apply_maneuver(const StateVector& sv, const Maneuver& m);

/// Piecewise-Keplerian trajectory: the initial element set, then a new arc
/// after every impulsive burn. Burns sharing an epoch are merged; burns with
/// exactly zero total dv do not open a new arc.
class Trajectory {
public:
    explicit Trajectory(const OrbitalElements& initial);
    Trajectory(const OrbitalElements& initial, std::span<const Maneuver> maneuvers);

    StateVector state_at(double epoch) const;
    Vec3 position_at(double epoch) const;

    /// Element set of the arc active at `epoch`, advanced to `epoch`.
    OrbitalElements elements_at(double epoch) const;

    /// Epoch of the first burn, or +inf for a purely ballistic trajectory.
    double first_burn_epoch() const;

    std::size_t arc_count() const { return arcs_.size(); }

private:
    const KeplerianOrbit& arc_for(double epoch) const;

    std::vector<KeplerianOrbit> arcs_;
    std::vector<double> arc_start_;  // arc_start_[0] is -inf
};

}  // namespace camopt
