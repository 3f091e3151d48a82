#include "doctest.h"

#include "camopt/generator.hpp"
#include "camopt/io.hpp"

#include <algorithm>
#include <numbers>
#include <random>

using namespace camopt;

namespace {

double angle_between(const Vec3& a, const Vec3& b)
{
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

// Two-sided one-sample Kolmogorov-Smirnov statistic against N(0, sigma).
double ks_normal(std::vector<double> x, double sigma)
{
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double cdf = 0.5 * std::erfc(-x[k] / (sigma * std::sqrt(2.0)));
        d = std::max({d, (k + 1) / n - cdf, cdf - k / n});
    }
    return d;
}

StateVector protected_state(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const OrbitalElements el{7.0e6 + 1.0e6 * u(rng), 0.003 * u(rng), constants::two_pi * u(rng),
                             constants::two_pi * u(rng), constants::two_pi * u(rng), constants::two_pi * u(rng),
                             6600.0};
    return elements_to_state(el);
}

}  // namespace

TEST_SUITE("generator")
{
    TEST_CASE("seeded generation is deterministic")
    {
        const GeneratorConfig cfg;
        CHECK(generate_situation(cfg, 3) == generate_situation(cfg, 3));
        CHECK_FALSE(generate_situation(cfg, 3) == generate_situation(cfg, 4));
        GeneratorConfig other = cfg;
        other.seed = 2;
        CHECK_FALSE(generate_situation(cfg, 3) == generate_situation(other, 3));
    }

    TEST_CASE("situation shape")
    {
        const GeneratorConfig cfg;
        const DangerousSituation s = generate_situation(cfg, 0);
        REQUIRE(s.debris.size() == 10);
        const double period = orbital_period(s.protected_object.elements.a) / constants::seconds_per_day;
        CHECK(s.window.start == doctest::Approx(6600.0 - period).epsilon(1e-15));
        CHECK(s.window.end == doctest::Approx(6601.0).epsilon(1e-15));
        CHECK(s.protected_object.elements.epoch == 6600.0);
        CHECK(s.debris[0].name == "DEBRIS0");
        CHECK(s.debris[9].name == "DEBRIS9");
        CHECK_NOTHROW(validate(s));
    }

    TEST_CASE("1000 samples stay inside the printed supports")
    {
        const GeneratorConfig cfg;
        std::vector<double> offsets;
        for (std::uint64_t idx = 0; idx < 1000; ++idx) {
            const DangerousSituation s = generate_situation(cfg, idx);
            const auto& p = s.protected_object;
            CHECK(p.elements.a >= 7.0e6);
            CHECK(p.elements.a <= 8.0e6);
            CHECK(p.elements.e >= 0.0);
            CHECK(p.elements.e <= 0.003);
            CHECK(p.radius >= 0.3);
            CHECK(p.radius <= 55.0);

            const StateVector ps = propagate(p.elements, 6600.0);
            const Vec3 hp = ps.position.cross(ps.velocity);
            for (const auto& d : s.debris) {
                CHECK(d.radius >= 0.05);
                CHECK(d.radius <= 1.0);
                const StateVector ds = elements_to_state(d.elements);
                // Retrograde debris flip the normal, so compare unoriented planes.
                const double alpha = angle_between(ds.position.cross(ds.velocity), hp);
                const double folded = std::min(alpha, std::numbers::pi - alpha);
                // Position spread tilts the reference plane by well under a milliradian.
                CHECK(folded >= 0.5 - 1e-3);
                CHECK(d.elements.epoch > 6600.0 - 1e-12);
                CHECK(d.elements.epoch <= s.window.end);
            }

            const Vec3 off = propagate_position(s.debris[0].elements, 6600.0) - ps.position;
            offsets.insert(offsets.end(), {off.x(), off.y(), off.z()});
        }
        // Critical value of the two-sided KS test at the 1% level.
        const double critical = 1.628 / std::sqrt(static_cast<double>(offsets.size()));
        CHECK(ks_normal(offsets, 50.0) < critical);
    }

    TEST_CASE("debris construction geometry")
    {
        const GeneratorConfig cfg;
        std::mt19937_64 rng(99);
        int positive = 0;
        const int n = 1000;
        for (int k = 0; k < n; ++k) {
            const StateVector ps = protected_state(rng);
            const DebrisDraw d = construct_debris(ps, k % 2 == 0, cfg, rng);
            const StateVector ds = elements_to_state(d.object.elements);
            const Vec3 r_hat = ds.position.normalized();
            const Vec3 n_d = d.direction * ds.position.cross(ds.velocity).normalized();
            const Vec3 n_p = ps.position.cross(ps.velocity).normalized();
            CHECK(std::abs(n_d.dot(r_hat)) < 1e-12);
            CHECK(std::abs(angle_between(n_d, n_p) - d.plane_angle) < 1e-9);
            CHECK(std::abs(ds.velocity.dot(r_hat)) / ds.velocity.norm() < 1e-9);
            CHECK((ds.position - ps.position - d.offset).norm() < 1e-6);
            CHECK(d.plane_angle >= cfg.plane_angle_min);
            CHECK(d.plane_angle <= cfg.plane_angle_max);
            CHECK(d.object.elements.e < 1.0);
            positive += d.direction > 0 ? 1 : 0;
        }
        CHECK(std::abs(positive / static_cast<double>(n) - 0.5) <= 0.05);
    }

    TEST_CASE("first debris always passes inside the screening distance")
    {
        const GeneratorConfig cfg;
        for (std::uint64_t idx = 0; idx < 20; ++idx) {
            const DangerousSituation s = generate_situation(cfg, idx);
            const std::vector<SpaceObject> first{s.debris[0]};
            const auto found = find_conjunctions(Trajectory(s.protected_object.elements), s.protected_object, first,
                                                 s.window, ProbabilityModel{});
            CHECK_FALSE(found.empty());
        }
    }

    TEST_CASE("serialization is lossless")
    {
        for (std::uint64_t idx = 0; idx < 10; ++idx) {
            const DangerousSituation s = generate_situation(GeneratorConfig{}, idx);
            const Json j = situation_to_json(s);
            CHECK(situation_from_json(j) == s);
            CHECK(situation_from_json(Json::parse(dump(j))) == s);
        }
    }

    TEST_CASE("config validation")
    {
        GeneratorConfig cfg;
        CHECK_NOTHROW(validate(cfg));
        cfg.n_debris = 0;
        CHECK_THROWS_AS(validate(cfg), InputError);
        cfg = {};
        cfg.protected_a_max = cfg.protected_a_min - 1.0;
        CHECK_THROWS_AS(validate(cfg), InputError);
        cfg = {};
        cfg.n_debris = 1;
        CHECK(generate_situation(cfg, 0).debris.size() == 1);
    }
}
