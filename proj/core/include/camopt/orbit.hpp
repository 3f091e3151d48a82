#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <numbers>
#include <stdexcept>
#include <string>

namespace camopt {

using Vec3 = Eigen::Vector3d;

namespace constants {
/// Earth gravitational parameter (m^3/s^2).
inline constexpr double mu = 3.986004418e14;
inline constexpr double earth_radius = 6371000.0;  // m
inline constexpr double seconds_per_day = 86400.0;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
}  // namespace constants

class OrbitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Osculating Keplerian elements. Angles in radians, epoch in days (mjd2000).
struct OrbitalElements {
    double a = 0.0;     // semi-major axis, m
    double e = 0.0;
    double i = 0.0;
    double raan = 0.0;
    double argp = 0.0;
    double mean_anomaly = 0.0;
    double epoch = 0.0;

    bool operator==(const OrbitalElements&) const = default;
};

/// Cartesian state in the Earth-centred inertial frame.
struct StateVector {
    Vec3 position = Vec3::Zero();  // m
    Vec3 velocity = Vec3::Zero();  // m/s
    double epoch = 0.0;            // days
};

/// Local orbital basis attached to a state.
struct OrbitFrame {
    Vec3 in_track;         // along velocity
    Vec3 radial_in_plane;  // in the orbital plane, orthogonal to velocity
    Vec3 cross_track;      // orbit normal
};

/// Throws OrbitError if `el` is not a bound, finite element set.
void validate(const OrbitalElements& el);

/// Solves M = E - e sin E by Newton iteration. The returned E lies in the
/// same 2*pi branch as M.
double solve_kepler(double mean_anomaly, double e);

double mean_motion(double a);      // rad/s
double orbital_period(double a);   // s

/// Wraps an angle to (-pi, pi].
double wrap_pi(double angle);
/// Wraps an angle to [0, 2*pi).
double wrap_two_pi(double angle);

StateVector elements_to_state(const OrbitalElements& el);

/// Inverse of elements_to_state. For e < 1e-11 the argument of periapsis is
/// set to 0 and the anomaly is measured from the node; for sin(i) < 1e-11
/// the node is placed on the x axis (raan = 0). Returned angles lie in
/// [0, 2*pi).
OrbitalElements state_to_elements(const StateVector& sv);

/// Same orbit with the mean anomaly advanced to `to_epoch` (two-body).
OrbitalElements advance(const OrbitalElements& el, double to_epoch);

StateVector propagate(const OrbitalElements& el, double to_epoch);

/// Position only; skips the velocity computation.
Vec3 propagate_position(const OrbitalElements& el, double to_epoch);

OrbitFrame orbit_frame(const StateVector& sv);

/// Element set with the perifocal basis and mean motion precomputed, for
/// repeated evaluation of the same orbit at many epochs.
class KeplerianOrbit {
public:
    explicit KeplerianOrbit(const OrbitalElements& el);

    const OrbitalElements& elements() const { return el_; }
    double mean_motion() const { return n_; }

    StateVector state_at(double epoch) const;
    Vec3 position_at(double epoch) const;

private:
    OrbitalElements el_;
    Vec3 p_;  // unit vector towards periapsis
    Vec3 q_;  // in-plane, 90 degrees ahead of p_
    double n_ = 0.0;
    double b_ = 0.0;  // semi-minor axis
};

double specific_energy(const StateVector& sv);

}  // namespace camopt
