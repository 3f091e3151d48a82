#include "doctest.h"

#include "camopt/fixtures.hpp"

#include <string>

using namespace camopt;

TEST_SUITE("fixtures")
{
    TEST_CASE("printed example values")
    {
        const GoldenExample& g = load_golden();
        CHECK(g.situation.protected_object.elements.a == 7530537.215);
        CHECK(g.situation.protected_object.radius == 20.686);
        CHECK(g.situation.window.start == 6599.921);
        CHECK(g.situation.window.end == 6601.0);
        REQUIRE(g.situation.debris.size() == 10);
        CHECK(g.situation.debris[9].name == "DEBRIS9");
        CHECK(g.situation.debris[9].radius == 0.895);
        CHECK(g.situation.debris[3].elements.a == 6203113.774);

        const Maneuver& base = g.maneuver(Algorithm::Baseline);
        CHECK(base.dv == Vec3(0.077, 0.005, -0.03));
        CHECK(base.epoch == 6599.962);
        CHECK(g.maneuver(Algorithm::CeInTrackAuto).epoch == 6599.950);
        CHECK(g.maneuvers.size() == 9);
        CHECK(g.result(Algorithm::GsCe).dev_a == 44.135);
        CHECK_FALSE(g.threshold.dev_mean_anomaly.has_value());
        CHECK(g.conjunctions_without.size() == 10);
        CHECK_FALSE(g.conjunctions_with.empty());
    }

    TEST_CASE("checksum is enforced")
    {
        CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
        CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
        const std::string doc(golden_document());
        CHECK(fnv1a64(doc) == golden_checksum());
        CHECK_NOTHROW(parse_golden(doc, golden_checksum()));

        std::string tampered = doc;
        tampered[tampered.find("7530537.215")] = '8';
        CHECK_THROWS_AS(parse_golden(tampered, golden_checksum()), ChecksumError);
        CHECK_THROWS_AS(parse_golden("{}", golden_checksum()), ChecksumError);
        CHECK_THROWS_AS(parse_golden("{}", fnv1a64("{}")), InputError);
    }

    TEST_CASE("replayed maneuvers reproduce the printed fuel")
    {
        const GoldenExample& g = load_golden();
        const Environment env(g.situation);
        for (const auto& gm : g.maneuvers) {
            CAPTURE(algorithm_id(gm.algorithm));
            const SessionResult r = env.run(std::span<const Maneuver>(&gm.maneuver, 1));
            // Printed components are rounded to three decimals; one row carries an extra rounding step.
            const double tol = gm.algorithm == Algorithm::CeOutOfPlaneHalf ? 0.002 : 0.001;
            CHECK(std::abs(r.fuel - g.result(gm.algorithm).fuel) <= tol);
        }
        CHECK(std::abs(env.run(std::span<const Maneuver>(&g.maneuver(Algorithm::Baseline), 1)).fuel - 0.083) <= 0.001);
    }

    TEST_CASE("loaded example is cached")
    {
        CHECK(&load_golden() == &load_golden());
    }
}
