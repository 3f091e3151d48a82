#pragma once

#include "camopt/generator.hpp"
#include "camopt/orbit.hpp"

#include <cmath>
#include <random>

namespace camopt::test {

inline double angle_gap(double a, double b)
{
    return std::abs(wrap_pi(a - b));
}

/// Random bound element set away from the degenerate e = 0 and i = 0, pi cases.
inline OrbitalElements random_elements(std::mt19937_64& rng, double epoch = 0.0)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    OrbitalElements el;
    el.a = 6.8e6 + 3.0e7 * u(rng);
    el.e = 1e-4 + 0.7 * u(rng);
    el.i = 0.05 + (std::numbers::pi - 0.1) * u(rng);
    el.raan = constants::two_pi * u(rng);
    el.argp = constants::two_pi * u(rng);
    el.mean_anomaly = constants::two_pi * u(rng);
    el.epoch = epoch;
    return el;
}

/// Circular LEO protected object with one debris that crosses its position
/// at `t_star` in a plane tilted by `angle`. Near-equal periods make the
/// pass repeat once per revolution.
inline DangerousSituation crossing_situation(double t_star = 6600.0, double angle = 1.2, double offset = 0.0,
                                             double speed_scale = 1.0)
{
    DangerousSituation s;
    s.protected_object.name = "PROTECTED";
    s.protected_object.radius = 10.0;
    s.protected_object.elements = {7.0e6, 0.001, 0.9, 1.0, 0.5, 2.0, t_star};

    const StateVector p = propagate(s.protected_object.elements, t_star);
    const Vec3 r_hat = p.position.normalized();
    const Vec3 n_p = p.position.cross(p.velocity).normalized();
    const Vec3 t_hat = n_p.cross(r_hat);
    // Debris normal: n_p rotated about r_hat by `angle`.
    const Vec3 n_d = std::cos(angle) * n_p + std::sin(angle) * r_hat.cross(n_p);

    StateVector d;
    d.position = p.position + offset * t_hat.cross(r_hat);
    d.velocity = speed_scale * p.velocity.norm() * n_d.cross(d.position.normalized());
    d.epoch = t_star;

    SpaceObject debris;
    debris.name = "DEBRIS0";
    debris.radius = 1.0;
    debris.elements = state_to_elements(d);
    s.debris.push_back(debris);

    const double period_days = orbital_period(s.protected_object.elements.a) / constants::seconds_per_day;
    s.window = {t_star - 0.9 * period_days, t_star + 0.25};
    return s;
}

}  // namespace camopt::test
