#pragma once

#include "camopt/orbit.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace camopt {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a problem is well-formed but has no feasible answer, e.g. the
/// first dangerous conjunction is too close to the window start.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultPositionSigma = 100.0;  // m, per axis

struct SpaceObject {
    std::string name;
    OrbitalElements elements;
    double radius = 1.0;                        // m
    double pos_sigma = kDefaultPositionSigma;   // m, 1-sigma per axis

    bool operator==(const SpaceObject&) const = default;
};

/// Impulsive velocity increment, inertial frame.
struct Maneuver {
    Vec3 dv = Vec3::Zero();  // m/s
    double epoch = 0.0;      // days

    bool operator==(const Maneuver& o) const { return dv == o.dv && epoch == o.epoch; }
};

struct Window {
    double start = 0.0;  // days
    double end = 0.0;

    double duration_days() const { return end - start; }
    bool contains(double t) const { return t >= start && t <= end; }
    bool operator==(const Window&) const = default;
};

struct DangerousSituation {
    SpaceObject protected_object;
    std::vector<SpaceObject> debris;
    Window window;

    bool operator==(const DangerousSituation&) const = default;
};

/// Throws InputError on radius <= 0, sigma <= 0 or invalid elements.
void validate(const SpaceObject& obj);

/// Object checks plus window ordering. `require_debris` enforces the
/// non-empty debris list of a generated situation; ad-hoc files may carry
/// none.
void validate(const DangerousSituation& s, bool require_debris = false);

double total_fuel(const std::vector<Maneuver>& maneuvers);

}  // namespace camopt
