#include "camopt/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace camopt {

namespace {

constexpr double kEpochMatchDays = 1e-9;

}  // namespace

void validate(const SpaceObject& obj)
{
    try {
        validate(obj.elements);
    } catch (const OrbitError& e) {
        throw InputError("object '" + obj.name + "': " + e.what());
    }
    if (!(obj.radius > 0.0) || !std::isfinite(obj.radius))
        throw InputError("object '" + obj.name + "': radius must be positive");
    if (!(obj.pos_sigma > 0.0) || !std::isfinite(obj.pos_sigma))
        throw InputError("object '" + obj.name + "': pos_sigma must be positive");
}

void validate(const DangerousSituation& s, bool require_debris)
{
    if (!std::isfinite(s.window.start) || !std::isfinite(s.window.end) || !(s.window.start < s.window.end))
        throw InputError("situation window must satisfy start < end");
    validate(s.protected_object);
    for (const auto& d : s.debris)
        validate(d);
    if (require_debris && s.debris.empty())
        throw InputError("situation has no debris");
}

double total_fuel(const std::vector<Maneuver>& maneuvers)
{
    double fuel = 0.0;
    for (const auto& m : maneuvers)
        fuel += m.dv.norm();
    return fuel;
}

StateVector apply_maneuver(const StateVector& sv, const Maneuver& m)
{
    if (std::abs(sv.epoch - m.epoch) > kEpochMatchDays) {
        std::ostringstream os;
        os.precision(12);
        os << "apply_maneuver: maneuver epoch " << m.epoch << " does not match state epoch " << sv.epoch;
        throw InputError(os.str());
    }
    StateVector out = sv;
    out.velocity += m.dv;
    return out;
}

Trajectory::Trajectory(const OrbitalElements& initial)
{
    arcs_.emplace_back(initial);
    arc_start_.push_back(-std::numeric_limits<double>::infinity());
}

Trajectory::Trajectory(const OrbitalElements& initial, std::span<const Maneuver> maneuvers)
    : Trajectory(initial)
{
    std::vector<Maneuver> burns(maneuvers.begin(), maneuvers.end());
    std::stable_sort(burns.begin(), burns.end(),
                     [](const Maneuver& x, const Maneuver& y) { return x.epoch < y.epoch; });

    std::size_t k = 0;
    while (k < burns.size()) {
        Maneuver merged = burns[k];
        std::size_t j = k + 1;
        while (j < burns.size() && burns[j].epoch == merged.epoch)
            merged.dv += burns[j++].dv;
        k = j;
        if (merged.dv.isZero(0.0))
            continue;

        const StateVector before = arcs_.back().state_at(merged.epoch);
        const StateVector after = apply_maneuver(before, merged);
        arcs_.emplace_back(state_to_elements(after));
        arc_start_.push_back(merged.epoch);
    }
}

const KeplerianOrbit& Trajectory::arc_for(double epoch) const
{
    // Last arc whose start is <= epoch.
    auto it = std::upper_bound(arc_start_.begin(), arc_start_.end(), epoch);
    return arcs_[static_cast<std::size_t>(it - arc_start_.begin()) - 1];
}

StateVector Trajectory::state_at(double epoch) const
{
    return arc_for(epoch).state_at(epoch);
}

Vec3 Trajectory::position_at(double epoch) const
{
    return arc_for(epoch).position_at(epoch);
}

OrbitalElements Trajectory::elements_at(double epoch) const
{
    return advance(arc_for(epoch).elements(), epoch);
}

double Trajectory::first_burn_epoch() const
{
    return arc_start_.size() > 1 ? arc_start_[1] : std::numeric_limits<double>::infinity();
}

}  // namespace camopt
