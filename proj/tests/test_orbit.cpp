#include "doctest.h"
#include "support.hpp"

#include "camopt/trajectory.hpp"

#include <random>

using namespace camopt;

namespace {

// Independent oracle: plain bisection on E - e sin E - M over [M - 1, M + 1].
double kepler_bisect(double m, double e)
{
    double lo = m - 1.0, hi = m + 1.0;
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid - e * std::sin(mid) - m < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("orbit")
{
    TEST_CASE("kepler solver agrees with bisection")
    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> m_dist(-20.0, 20.0), e_dist(0.0, 0.95);
        for (int k = 0; k < 2000; ++k) {
            const double m = m_dist(rng), e = e_dist(rng);
            CHECK(std::abs(solve_kepler(m, e) - kepler_bisect(m, e)) < 1e-11);
        }
    }

    TEST_CASE("kepler solver keeps the branch of M")
    {
        CHECK(solve_kepler(0.0, 0.3) == 0.0);
        CHECK(solve_kepler(std::numbers::pi, 0.5) == doctest::Approx(std::numbers::pi));
        const double m = 4.0 * constants::two_pi + 0.3;
        const double e = solve_kepler(m, 0.1);
        CHECK(e - 0.1 * std::sin(e) == doctest::Approx(m).epsilon(1e-14));
        CHECK_THROWS_AS(solve_kepler(0.1, 1.0), OrbitError);
        CHECK_THROWS_AS(solve_kepler(std::nan(""), 0.1), OrbitError);
    }

    TEST_CASE("elements to state and back")
    {
        std::mt19937_64 rng(11);
        for (int k = 0; k < 500; ++k) {
            const OrbitalElements el = test::random_elements(rng);
            const StateVector sv = elements_to_state(el);
            const OrbitalElements back = state_to_elements(sv);
            CHECK(std::abs(back.a - el.a) / el.a < 1e-9);
            CHECK(std::abs(back.e - el.e) < 1e-9);
            CHECK(test::angle_gap(back.i, el.i) < 1e-9);
            CHECK(test::angle_gap(back.raan, el.raan) < 1e-9);
            CHECK(test::angle_gap(back.argp, el.argp) < 1e-8);
            CHECK(test::angle_gap(back.mean_anomaly, el.mean_anomaly) < 1e-8);

            const StateVector again = elements_to_state(back);
            CHECK((again.position - sv.position).norm() / sv.position.norm() < 1e-9);
            CHECK((again.velocity - sv.velocity).norm() / sv.velocity.norm() < 1e-9);
        }
    }

    TEST_CASE("degenerate conventions")
    {
        // Circular equatorial orbit: argp = raan = 0, the anomaly carries the phase.
        StateVector sv;
        const double r = 7.0e6;
        const double v = std::sqrt(constants::mu / r);
        sv.position = Vec3(r * std::cos(0.4), r * std::sin(0.4), 0.0);
        sv.velocity = Vec3(-v * std::sin(0.4), v * std::cos(0.4), 0.0);
        const OrbitalElements el = state_to_elements(sv);
        CHECK(el.e == 0.0);
        CHECK(el.argp == 0.0);
        CHECK(el.raan == 0.0);
        CHECK(el.mean_anomaly == doctest::Approx(0.4).epsilon(1e-9));
        CHECK((elements_to_state(el).position - sv.position).norm() < 1e-6);
    }

    TEST_CASE("energy and angular momentum are conserved")
    {
        std::mt19937_64 rng(13);
        for (int k = 0; k < 50; ++k) {
            const OrbitalElements el = test::random_elements(rng);
            const double expected = -constants::mu / (2.0 * el.a);
            const Vec3 h0 = elements_to_state(el).position.cross(elements_to_state(el).velocity);
            for (double t : {0.01, 0.37, 1.5, 10.0}) {
                const StateVector sv = propagate(el, t);
                CHECK(std::abs(specific_energy(sv) - expected) / std::abs(expected) < 1e-9);
                CHECK((sv.position.cross(sv.velocity) - h0).norm() / h0.norm() < 1e-9);
            }
        }
    }

    TEST_CASE("propagation is periodic")
    {
        // Epoch 0 keeps the day arithmetic exact.
        std::mt19937_64 rng(17);
        for (int k = 0; k < 50; ++k) {
            const OrbitalElements el = test::random_elements(rng, 0.0);
            const double period_days = orbital_period(el.a) / constants::seconds_per_day;
            const Vec3 r0 = propagate_position(el, 0.0);
            CHECK((propagate_position(el, period_days) - r0).norm() < 1e-6);
        }
    }

    TEST_CASE("advance composes")
    {
        std::mt19937_64 rng(19);
        const OrbitalElements el = test::random_elements(rng, 0.0);
        const OrbitalElements mid = advance(el, 0.25);
        CHECK((propagate_position(mid, 0.5) - propagate_position(el, 0.5)).norm() < 1e-6);
        CHECK(mid.epoch == 0.25);
    }

    TEST_CASE("wrapping")
    {
        CHECK(wrap_pi(std::numbers::pi) == doctest::Approx(std::numbers::pi));
        CHECK(wrap_pi(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
        CHECK(wrap_pi(constants::two_pi - 0.002) == doctest::Approx(-0.002));
        CHECK(wrap_two_pi(-0.5) == doctest::Approx(constants::two_pi - 0.5));
        CHECK(wrap_two_pi(constants::two_pi) == 0.0);
    }

    TEST_CASE("invalid elements are rejected")
    {
        OrbitalElements el{7e6, 0.1, 0.5, 0.0, 0.0, 0.0, 0.0};
        CHECK_NOTHROW(validate(el));
        el.e = 1.0;
        CHECK_THROWS_AS(validate(el), OrbitError);
        el.e = 0.1;
        el.a = -1.0;
        CHECK_THROWS_AS(validate(el), OrbitError);
    }

    TEST_CASE("local orbit frame is orthonormal and right-handed")
    {
        std::mt19937_64 rng(23);
        const StateVector sv = elements_to_state(test::random_elements(rng));
        const OrbitFrame f = orbit_frame(sv);
        CHECK(f.in_track.dot(sv.velocity.normalized()) == doctest::Approx(1.0));
        CHECK(std::abs(f.in_track.dot(f.radial_in_plane)) < 1e-12);
        CHECK(std::abs(f.cross_track.dot(sv.position)) < 1e-6);
        CHECK((f.cross_track.cross(f.in_track) - f.radial_in_plane).norm() < 1e-12);
    }

    TEST_CASE("impulsive maneuvers")
    {
        const OrbitalElements el{7.0e6, 0.0, 0.7, 0.3, 0.0, 1.0, 100.0};
        const StateVector sv = elements_to_state(el);

        SUBCASE("zero burn keeps the state")
        {
            const StateVector out = apply_maneuver(sv, {Vec3::Zero(), 100.0});
            CHECK(out.position == sv.position);
            CHECK(out.velocity == sv.velocity);
        }
        SUBCASE("prograde burn raises the orbit")
        {
            const StateVector out = apply_maneuver(sv, {0.5 * sv.velocity.normalized(), 100.0});
            CHECK(out.position == sv.position);
            CHECK(state_to_elements(out).a > el.a);
        }
        SUBCASE("velocity reversal keeps a and flips h")
        {
            const StateVector out = apply_maneuver(sv, {-2.0 * sv.velocity, 100.0});
            CHECK(state_to_elements(out).a == doctest::Approx(el.a).epsilon(1e-12));
            const Vec3 h0 = sv.position.cross(sv.velocity), h1 = out.position.cross(out.velocity);
            CHECK((h0 + h1).norm() / h0.norm() < 1e-12);
        }
        SUBCASE("epoch mismatch")
        {
            CHECK_THROWS_AS(apply_maneuver(sv, {Vec3::Zero(), 100.5}), InputError);
        }
    }

    TEST_CASE("piecewise trajectory")
    {
        const OrbitalElements el{7.0e6, 0.001, 0.7, 0.3, 0.2, 1.0, 0.0};
        const Trajectory ballistic(el);
        CHECK(ballistic.arc_count() == 1);
        CHECK(std::isinf(ballistic.first_burn_epoch()));

        const Vec3 dv(0.1, -0.05, 0.02);
        const std::vector<Maneuver> one{{dv, 0.125}};
        const Trajectory t1(el, one);
        CHECK(t1.arc_count() == 2);
        CHECK(t1.first_burn_epoch() == 0.125);
        // Continuous position at the burn; velocity jumps by dv.
        // Arcs restart from converted elements, so agreement is to round-off.
        const StateVector before = ballistic.state_at(0.125), after = t1.state_at(0.125);
        CHECK((after.position - before.position).norm() < 1e-12 * before.position.norm());
        CHECK((after.velocity - before.velocity - dv).norm() < 1e-12 * before.velocity.norm());
        CHECK(t1.position_at(0.1) == ballistic.position_at(0.1));

        // Two half burns at the same epoch equal one full burn.
        const std::vector<Maneuver> halves{{0.5 * dv, 0.125}, {0.5 * dv, 0.125}};
        const Trajectory t2(el, halves);
        CHECK((t2.position_at(0.6) - t1.position_at(0.6)).norm() < 1e-9 * el.a);

        const std::vector<Maneuver> zero{{Vec3::Zero(), 0.125}};
        CHECK(Trajectory(el, zero).arc_count() == 1);
    }
}
