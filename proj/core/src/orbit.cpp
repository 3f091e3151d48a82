#include "camopt/orbit.hpp"

#include <cmath>
#include <sstream>

namespace camopt {

namespace {

constexpr double kKeplerTolerance = 1e-12;
constexpr int kKeplerMaxIterations = 50;
constexpr double kDegenerate = 1e-11;
constexpr double kSmallStep = 1e-5;

}  // namespace

void validate(const OrbitalElements& el)
{
    std::ostringstream why;
    if (!(el.a > 0.0) || !std::isfinite(el.a))
        why << "semi-major axis must be positive (a=" << el.a << ")";
    else if (!(el.e >= 0.0 && el.e < 1.0))
        why << "eccentricity must lie in [0, 1) (e=" << el.e << ")";
    else if (!std::isfinite(el.i) || !std::isfinite(el.raan) || !std::isfinite(el.argp)
             || !std::isfinite(el.mean_anomaly))
        why << "angles must be finite";
    else if (!std::isfinite(el.epoch))
        why << "epoch must be finite";
    else
        return;
    throw OrbitError(why.str());
}

double wrap_pi(double angle)
{
    double w = std::remainder(angle, constants::two_pi);  // [-pi, pi]
    if (w <= -std::numbers::pi)
        w += constants::two_pi;
    return w;
}

double wrap_two_pi(double angle)
{
    double w = std::fmod(angle, constants::two_pi);
    if (w < 0.0)
        w += constants::two_pi;
    if (w >= constants::two_pi)
        w = 0.0;
    return w;
}

namespace {

struct KeplerSolution {
    double ecc_anomaly;
    double sin_e;
    double cos_e;
};

// Newton iteration in the principal branch; also returns sin/cos of the
// converged anomaly so callers need not recompute them.
KeplerSolution kepler(double mean_anomaly, double e)
{
    const double branch = constants::two_pi * std::nearbyint(mean_anomaly / constants::two_pi);
    const double m = mean_anomaly - branch;

    double ecc_anomaly = (e < 0.8) ? m : (m >= 0.0 ? std::numbers::pi : -std::numbers::pi);
    double s = std::sin(ecc_anomaly), c = std::cos(ecc_anomaly);
    for (int it = 0; it <= kKeplerMaxIterations; ++it) {
        const double f = ecc_anomaly - e * s - m;
        if (std::abs(f) <= kKeplerTolerance)
            return {ecc_anomaly + branch, s, c};
        const double step = -f / (1.0 - e * c);
        ecc_anomaly += step;
        if (std::abs(step) < kSmallStep) {
            // Angle addition with truncated series; exact to rounding here.
            const double cs = 1.0 - 0.5 * step * step;
            const double ss = step * (1.0 - step * step / 6.0);
            const double s_new = s * cs + c * ss;
            c = c * cs - s * ss;
            s = s_new;
        } else {
            s = std::sin(ecc_anomaly);
            c = std::cos(ecc_anomaly);
        }
    }
    throw OrbitError("solve_kepler: no convergence");
}

}  // namespace

double solve_kepler(double mean_anomaly, double e)
{
    if (!(e >= 0.0 && e < 1.0))
        throw OrbitError("solve_kepler: eccentricity outside [0, 1)");
    if (!std::isfinite(mean_anomaly))
        throw OrbitError("solve_kepler: non-finite mean anomaly");
    return kepler(mean_anomaly, e).ecc_anomaly;
}

double mean_motion(double a)
{
    return std::sqrt(constants::mu / (a * a * a));
}

double orbital_period(double a)
{
    return constants::two_pi * std::sqrt(a * a * a / constants::mu);
}

KeplerianOrbit::KeplerianOrbit(const OrbitalElements& el) : el_(el)
{
    validate(el);
    const double co = std::cos(el.raan), so = std::sin(el.raan);
    const double ci = std::cos(el.i), si = std::sin(el.i);
    const double cw = std::cos(el.argp), sw = std::sin(el.argp);
    p_ = Vec3(co * cw - so * sw * ci, so * cw + co * sw * ci, sw * si);
    q_ = Vec3(-co * sw - so * cw * ci, -so * sw + co * cw * ci, cw * si);
    n_ = camopt::mean_motion(el.a);
    b_ = el.a * std::sqrt(1.0 - el.e * el.e);
}

Vec3 KeplerianOrbit::position_at(double epoch) const
{
    const double m = el_.mean_anomaly + n_ * (epoch - el_.epoch) * constants::seconds_per_day;
    if (!std::isfinite(m))
        throw OrbitError("position_at: non-finite mean anomaly");
    const auto [ecc_anomaly, se, ce] = kepler(m, el_.e);
    return el_.a * (ce - el_.e) * p_ + b_ * se * q_;
}

StateVector KeplerianOrbit::state_at(double epoch) const
{
    const double m = el_.mean_anomaly + n_ * (epoch - el_.epoch) * constants::seconds_per_day;
    if (!std::isfinite(m))
        throw OrbitError("state_at: non-finite mean anomaly");
    const auto [ecc_anomaly, se, ce] = kepler(m, el_.e);
    const double r = el_.a * (1.0 - el_.e * ce);
    const double edot = n_ * el_.a / r;

    StateVector sv;
    sv.position = el_.a * (ce - el_.e) * p_ + b_ * se * q_;
    sv.velocity = -el_.a * se * edot * p_ + b_ * ce * edot * q_;
    sv.epoch = epoch;
    return sv;
}

StateVector elements_to_state(const OrbitalElements& el)
{
    return KeplerianOrbit(el).state_at(el.epoch);
}

StateVector propagate(const OrbitalElements& el, double to_epoch)
{
    return KeplerianOrbit(el).state_at(to_epoch);
}

Vec3 propagate_position(const OrbitalElements& el, double to_epoch)
{
    return KeplerianOrbit(el).position_at(to_epoch);
}

OrbitalElements advance(const OrbitalElements& el, double to_epoch)
{
    OrbitalElements out = el;
    out.mean_anomaly = el.mean_anomaly
                       + mean_motion(el.a) * (to_epoch - el.epoch) * constants::seconds_per_day;
    out.epoch = to_epoch;
    return out;
}

double specific_energy(const StateVector& sv)
{
    return 0.5 * sv.velocity.squaredNorm() - constants::mu / sv.position.norm();
}

OrbitalElements state_to_elements(const StateVector& sv)
{
    const Vec3& r = sv.position;
    const Vec3& v = sv.velocity;
    const double rn = r.norm();
    const double energy = specific_energy(sv);
    if (!(energy < 0.0))
        throw OrbitError("state_to_elements: orbit is not bound");

    const Vec3 h = r.cross(v);
    const double hn = h.norm();
    if (!(hn > 0.0))
        throw OrbitError("state_to_elements: rectilinear orbit");
    const Vec3 w = h / hn;

    OrbitalElements el;
    el.epoch = sv.epoch;
    el.a = -constants::mu / (2.0 * energy);

    const Vec3 ecc_vec = ((v.squaredNorm() - constants::mu / rn) * r - r.dot(v) * v) / constants::mu;
    el.e = ecc_vec.norm();

    const double sin_i = std::hypot(w.x(), w.y());
    el.i = std::atan2(sin_i, w.z());
    el.raan = (sin_i < kDegenerate) ? 0.0 : wrap_two_pi(std::atan2(w.x(), -w.y()));

    const Vec3 node(std::cos(el.raan), std::sin(el.raan), 0.0);
    const Vec3 ahead = w.cross(node);

    double true_anomaly;
    const double arg_latitude = std::atan2(r.dot(ahead), r.dot(node));
    if (el.e < kDegenerate) {
        el.e = 0.0;
        el.argp = 0.0;
        true_anomaly = arg_latitude;
    } else {
        el.argp = wrap_two_pi(std::atan2(ecc_vec.dot(ahead), ecc_vec.dot(node)));
        true_anomaly = arg_latitude - el.argp;
    }

    const double ecc_anomaly = 2.0 * std::atan2(std::sqrt(1.0 - el.e) * std::sin(0.5 * true_anomaly),
                                                std::sqrt(1.0 + el.e) * std::cos(0.5 * true_anomaly));
    el.mean_anomaly = wrap_two_pi(ecc_anomaly - el.e * std::sin(ecc_anomaly));
    return el;
}

OrbitFrame orbit_frame(const StateVector& sv)
{
    const double vn = sv.velocity.norm();
    if (!(vn > 0.0))
        throw OrbitError("orbit_frame: zero velocity");
    const Vec3 h = sv.position.cross(sv.velocity);
    const double hn = h.norm();
    if (!(hn > 0.0))
        throw OrbitError("orbit_frame: position parallel to velocity");

    OrbitFrame f;
    f.in_track = sv.velocity / vn;
    f.cross_track = h / hn;
    f.radial_in_plane = f.cross_track.cross(f.in_track);
    return f;
}

}  // namespace camopt
