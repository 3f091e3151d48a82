#pragma once

#include "camopt/bench.hpp"
#include "camopt/generator.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace camopt {

using Json = nlohmann::ordered_json;

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

Json object_to_json(const SpaceObject& obj);
SpaceObject object_from_json(const Json& j);

/// Situation document: {"window", "protected", "debris"}. Parsing validates
/// the result and throws InputError on any problem.
Json situation_to_json(const DangerousSituation& s);
DangerousSituation situation_from_json(const Json& j);

/// List of {"dvx", "dvy", "dvz", "epoch"}.
Json maneuvers_to_json(std::span<const Maneuver> maneuvers);
std::vector<Maneuver> maneuvers_from_json(const Json& j);

Json conjunctions_to_json(std::span<const Conjunction> conjunctions);
std::vector<Conjunction> conjunctions_from_json(const Json& j);
/// Header: debris name,miss distance (m),epoch (mjd2000),collision probability,collision danger
std::string conjunctions_to_csv(std::span<const Conjunction> conjunctions);
std::vector<Conjunction> conjunctions_from_csv(std::string_view csv);

Json session_result_to_json(const SessionResult& r);
SessionResult session_result_from_json(const Json& j);

std::vector<MetricsRow> metrics_from_csv(std::string_view csv);

/// Everything a command may need, as one JSON document. Missing keys keep
/// their defaults; unknown keys are rejected.
struct RunConfig {
    RewardConfig reward;
    ProbabilityModel model;
    ScreeningOptions screening;
    SolverConfig solver;
    MetricsConfig metrics;
    GeneratorConfig generator;
    std::optional<std::string> results_dir;  // per-cell audit output of evaluate
};

Json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const Json& j);
/// Sets every seed of the config (CE and generator).
void override_seed(RunConfig& cfg, std::uint64_t seed);

/// Throws InputError when the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
/// Throws InputError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);
/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace camopt
