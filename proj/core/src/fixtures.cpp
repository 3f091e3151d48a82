#include "camopt/fixtures.hpp"

#include <algorithm>

namespace camopt {

namespace {

// Values exactly as printed; angles in radians, epochs in mjd2000 days.
constexpr std::string_view kGolden = R"golden({
  "situation": {
    "window": {"start": 6599.921, "end": 6601.0},
    "protected": {"name": "PROTECTED", "a": 7530537.215, "e": 0.003, "i": 0.562, "raan": 2.551, "argp": 0.153, "mean_anomaly": 2.153, "epoch": 6600.000, "radius": 20.686, "pos_sigma": 100.0},
    "debris": [
      {"name": "DEBRIS0", "a": 7360115.107, "e": 0.025, "i": 1.555, "raan": 1.809, "argp": 5.915, "mean_anomaly": 3.103, "epoch": 6600.000, "radius": 0.738, "pos_sigma": 100.0},
      {"name": "DEBRIS1", "a": 8033345.687, "e": 0.060, "i": 0.896, "raan": 5.957, "argp": 6.143, "mean_anomaly": -0.000, "epoch": 6600.389, "radius": 0.367, "pos_sigma": 100.0},
      {"name": "DEBRIS2", "a": 7682829.226, "e": 0.022, "i": 1.146, "raan": 2.022, "argp": 5.930, "mean_anomaly": -0.076, "epoch": 6600.791, "radius": 0.562, "pos_sigma": 100.0},
      {"name": "DEBRIS3", "a": 6203113.774, "e": 0.212, "i": 2.103, "raan": 3.738, "argp": 3.677, "mean_anomaly": -3.139, "epoch": 6600.887, "radius": 0.564, "pos_sigma": 100.0},
      {"name": "DEBRIS4", "a": 7679322.768, "e": 0.017, "i": 0.591, "raan": 0.852, "argp": 5.567, "mean_anomaly": -0.068, "epoch": 6600.923, "radius": 0.276, "pos_sigma": 100.0},
      {"name": "DEBRIS5", "a": 8738088.965, "e": 0.140, "i": 0.376, "raan": 0.657, "argp": 2.312, "mean_anomaly": 0.005, "epoch": 6600.581, "radius": 0.107, "pos_sigma": 100.0},
      {"name": "DEBRIS6", "a": 8101742.447, "e": 0.072, "i": 1.856, "raan": 3.769, "argp": 0.527, "mean_anomaly": -0.002, "epoch": 6600.061, "radius": 0.053, "pos_sigma": 100.0},
      {"name": "DEBRIS7", "a": 7084346.824, "e": 0.063, "i": 2.168, "raan": 4.917, "argp": 3.765, "mean_anomaly": -3.105, "epoch": 6600.597, "radius": 0.320, "pos_sigma": 100.0},
      {"name": "DEBRIS8", "a": 7150262.637, "e": 0.056, "i": 2.882, "raan": 3.179, "argp": 0.461, "mean_anomaly": 3.140, "epoch": 6600.238, "radius": 0.674, "pos_sigma": 100.0},
      {"name": "DEBRIS9", "a": 7468758.271, "e": 0.006, "i": 2.484, "raan": 2.870, "argp": 3.314, "mean_anomaly": -3.134, "epoch": 6600.652, "radius": 0.895, "pos_sigma": 100.0}
    ]
  },
  "maneuvers": [
    {"algorithm": "baseline", "dvx": 0.077, "dvy": 0.005, "dvz": -0.03, "epoch": 6599.962},
    {"algorithm": "gs", "dvx": 0.089, "dvy": 0.005, "dvz": -0.034, "epoch": 6599.962},
    {"algorithm": "gs-ce", "dvx": -0.072, "dvy": 0.235, "dvz": -0.098, "epoch": 6599.962},
    {"algorithm": "ce-in-track-half", "dvx": -0.088, "dvy": -0.005, "dvz": 0.033, "epoch": 6599.962},
    {"algorithm": "ce-in-plane-half", "dvx": 0.078, "dvy": -0.187, "dvz": 0.07, "epoch": 6599.962},
    {"algorithm": "ce-out-of-plane-half", "dvx": 0.091, "dvy": 0.343, "dvz": 0.469, "epoch": 6599.962},
    {"algorithm": "ce-in-track-auto", "dvx": -0.106, "dvy": -0.15, "dvz": 0.116, "epoch": 6599.950},
    {"algorithm": "ce-in-plane-auto", "dvx": -0.058, "dvy": -0.113, "dvz": 0.079, "epoch": 6599.951},
    {"algorithm": "ce-out-of-plane-auto", "dvx": -0.191, "dvy": -0.219, "dvz": 0.022, "epoch": 6599.951}
  ],
  "results": [
    {"label": "threshold", "pc": 0.0001, "fuel": 1.0, "dev_a": 200.0, "dev_e": 0.01, "dev_i": 0.01, "dev_raan": 0.01, "dev_argp": 0.01, "dev_mean_anomaly": null, "reward": -7.0},
    {"label": "without maneuvers", "pc": 8.54e-03, "fuel": 0.0, "dev_a": -0.0, "dev_e": 0.0, "dev_i": 0.0, "dev_raan": 0.0, "dev_argp": -0.0, "dev_mean_anomaly": 0.0, "reward": -761.0},
    {"label": "baseline", "pc": 9.98e-05, "fuel": 0.083, "dev_a": -172.241, "dev_e": -1e-05, "dev_i": 0.0, "dev_raan": 0.0, "dev_argp": 0.00696, "dev_mean_anomaly": -0.00706, "reward": -2.639},
    {"label": "gs", "pc": 3.68e-05, "fuel": 0.095, "dev_a": -197.142, "dev_e": -1e-05, "dev_i": 0.0, "dev_raan": 0.0, "dev_argp": 0.00797, "dev_mean_anomaly": -0.00809, "reward": -2.247},
    {"label": "gs-ce", "pc": 1.17e-05, "fuel": 0.265, "dev_a": 44.135, "dev_e": -3e-05, "dev_i": 0.0, "dev_raan": 0.0, "dev_argp": -0.00898, "dev_mean_anomaly": 0.00894, "reward": -1.503},
    {"label": "ce-in-track-half", "pc": 4.87e-05, "fuel": 0.094, "dev_a": 194.788, "dev_e": 1e-05, "dev_i": 0.0, "dev_raan": 0.0, "dev_argp": -0.00779, "dev_mean_anomaly": 0.00791, "reward": -2.335},
    {"label": "ce-in-plane-half", "pc": 3.68e-05, "fuel": 0.215, "dev_a": -81.006, "dev_e": 2e-05, "dev_i": 0.0, "dev_raan": 0.0, "dev_argp": 0.0089, "dev_mean_anomaly": -0.00889, "reward": -1.88},
    {"label": "ce-out-of-plane-half", "pc": 4.52e-05, "fuel": 0.589, "dev_a": 132.594, "dev_e": -0.0, "dev_i": 5e-05, "dev_raan": -1e-4, "dev_argp": -0.00801, "dev_mean_anomaly": 0.00816, "reward": -2.521},
    {"label": "ce-in-track-auto", "pc": 2e-07, "fuel": 0.217, "dev_a": -127.87, "dev_e": 3e-05, "dev_i": 0.0, "dev_raan": 0.0, "dev_argp": 0.00092, "dev_mean_anomaly": -0.00091, "reward": -0.954},
    {"label": "ce-in-plane-auto", "pc": 1.7e-06, "fuel": 0.15, "dev_a": -122.371, "dev_e": 2e-05, "dev_i": 0.0, "dev_raan": -0.0, "dev_argp": 0.00222, "dev_mean_anomaly": -0.00224, "reward": -1.004},
    {"label": "ce-out-of-plane-auto", "pc": 2.3e-06, "fuel": 0.291, "dev_a": -88.725, "dev_e": 4e-05, "dev_i": 1e-05, "dev_raan": 3e-05, "dev_argp": -0.00178, "dev_mean_anomaly": 0.00178, "reward": -0.943}
  ],
  "conjunctions_without": [
    {"debris_name": "DEBRIS0", "miss_distance": 307.033, "epoch": 6600.0, "probability": 0.0024134, "danger": true},
    {"debris_name": "DEBRIS6", "miss_distance": 226.991, "epoch": 6600.061, "probability": 0.0019874, "danger": true},
    {"debris_name": "DEBRIS8", "miss_distance": 1544.347, "epoch": 6600.238, "probability": 0.0, "danger": false},
    {"debris_name": "DEBRIS1", "miss_distance": 750.614, "epoch": 6600.389, "probability": 0.0001279, "danger": true},
    {"debris_name": "DEBRIS5", "miss_distance": 367.326, "epoch": 6600.581, "probability": 0.00133, "danger": true},
    {"debris_name": "DEBRIS7", "miss_distance": 440.747, "epoch": 6600.597, "probability": 0.0008903, "danger": true},
    {"debris_name": "DEBRIS9", "miss_distance": 617.282, "epoch": 6600.652, "probability": 0.0005554, "danger": true},
    {"debris_name": "DEBRIS2", "miss_distance": 983.557, "epoch": 6600.791, "probability": 1.32e-05, "danger": false},
    {"debris_name": "DEBRIS3", "miss_distance": 477.438, "epoch": 6600.887, "probability": 0.0009085, "danger": true},
    {"debris_name": "DEBRIS4", "miss_distance": 617.896, "epoch": 6600.923, "probability": 0.0003476, "danger": true}
  ],
  "conjunctions_with": [
    {"debris_name": "DEBRIS0", "miss_distance": 1254.839, "epoch": 6600.0, "probability": 7e-07, "danger": false},
    {"debris_name": "DEBRIS6", "miss_distance": 1456.678, "epoch": 6600.061, "probability": 0.0, "danger": false},
    {"debris_name": "DEBRIS8", "miss_distance": 1295.103, "epoch": 6600.238, "probability": 1.6e-06, "danger": false},
    {"debris_name": "DEBRIS5", "miss_distance": 1493.772, "epoch": 6600.957, "probability": 0.0, "danger": false}
  ]
}
)golden";

constexpr std::uint64_t kGoldenChecksum = 0x55f2b28cce6390c2ULL;

GoldenResultRow row_from_json(const Json& j)
{
    GoldenResultRow r;
    r.label = j.at("label").get<std::string>();
    r.collision_probability = j.at("pc").get<double>();
    r.fuel = j.at("fuel").get<double>();
    r.dev_a = j.at("dev_a").get<double>();
    r.dev_e = j.at("dev_e").get<double>();
    r.dev_i = j.at("dev_i").get<double>();
    r.dev_raan = j.at("dev_raan").get<double>();
    r.dev_argp = j.at("dev_argp").get<double>();
    if (!j.at("dev_mean_anomaly").is_null())
        r.dev_mean_anomaly = j.at("dev_mean_anomaly").get<double>();
    r.reward = j.at("reward").get<double>();
    return r;
}

}  // namespace

Outcome GoldenResultRow::outcome() const
{
    Outcome o;
    o.total_probability = collision_probability;
    o.fuel = fuel;
    o.deviations = {dev_a, dev_e, dev_i, dev_raan, dev_argp, dev_mean_anomaly.value_or(0.0)};
    return o;
}

const GoldenResultRow& GoldenExample::result(Algorithm a) const
{
    const auto it = std::find_if(results.begin(), results.end(),
                                 [&](const GoldenResultRow& r) { return r.label == algorithm_id(a); });
    if (it == results.end())
        throw InputError("golden example has no result row for " + std::string(algorithm_id(a)));
    return *it;
}

const Maneuver& GoldenExample::maneuver(Algorithm a) const
{
    const auto it = std::find_if(maneuvers.begin(), maneuvers.end(),
                                 [&](const GoldenManeuver& m) { return m.algorithm == a; });
    if (it == maneuvers.end())
        throw InputError("golden example has no maneuver for " + std::string(algorithm_id(a)));
    return it->maneuver;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string_view golden_document()
{
    return kGolden;
}

std::uint64_t golden_checksum()
{
    return kGoldenChecksum;
}

GoldenExample parse_golden(std::string_view document, std::uint64_t expected_checksum)
{
    if (fnv1a64(document) != expected_checksum)
        throw ChecksumError("golden data checksum mismatch");

    Json j;
    try {
        j = Json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("golden data: malformed JSON: ") + e.what());
    }

    GoldenExample g;
    try {
        g.situation = situation_from_json(j.at("situation"));
        for (const auto& m : j.at("maneuvers")) {
            GoldenManeuver gm{parse_algorithm(m.at("algorithm").get<std::string>()), {}};
            gm.maneuver = maneuvers_from_json(Json::array({m})).front();
            g.maneuvers.push_back(gm);
        }
        const auto& rows = j.at("results");
        for (const auto& r : rows) {
            GoldenResultRow row = row_from_json(r);
            if (row.label == "threshold")
                g.threshold = std::move(row);
            else if (row.label == "without maneuvers")
                g.without_maneuvers = std::move(row);
            else
                g.results.push_back(std::move(row));
        }
        g.conjunctions_without = conjunctions_from_json(j.at("conjunctions_without"));
        g.conjunctions_with = conjunctions_from_json(j.at("conjunctions_with"));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("golden data: ") + e.what());
    }
    validate(g.situation, true);
    return g;
}

const GoldenExample& load_golden()
{
    static const GoldenExample golden = parse_golden(golden_document(), golden_checksum());
    return golden;
}

}  // namespace camopt
