#pragma once

#include "camopt/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace camopt {

class ChecksumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One printed row of the result-values table. `dev_mean_anomaly` is empty
/// where the table prints "-".
struct GoldenResultRow {
    std::string label;
    double collision_probability = 0.0;
    double fuel = 0.0;
    double dev_a = 0.0;
    double dev_e = 0.0;
    double dev_i = 0.0;
    double dev_raan = 0.0;
    double dev_argp = 0.0;
    std::optional<double> dev_mean_anomaly;
    double reward = 0.0;

    Outcome outcome() const;
};

struct GoldenManeuver {
    Algorithm algorithm;
    Maneuver maneuver;
};

struct GoldenExample {
    DangerousSituation situation;
    std::vector<GoldenManeuver> maneuvers;
    GoldenResultRow threshold;
    GoldenResultRow without_maneuvers;
    std::vector<GoldenResultRow> results;          // one per algorithm, table order
    std::vector<Conjunction> conjunctions_without;  // no maneuvers
    std::vector<Conjunction> conjunctions_with;     // after the ce-out-of-plane-auto maneuver

    const GoldenResultRow& result(Algorithm a) const;
    const Maneuver& maneuver(Algorithm a) const;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// The embedded document and its expected checksum.
std::string_view golden_document();
std::uint64_t golden_checksum();

/// Parses a golden document after verifying its checksum. Throws
/// ChecksumError on mismatch and InputError on malformed content.
GoldenExample parse_golden(std::string_view document, std::uint64_t expected_checksum);

/// parse_golden(golden_document(), golden_checksum()).
const GoldenExample& load_golden();

}  // namespace camopt
