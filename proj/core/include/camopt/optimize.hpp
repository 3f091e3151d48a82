#pragma once

#include "camopt/cross_entropy.hpp"
#include "camopt/env.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace camopt {

/// Burn direction family. In-track: one scalar along the velocity.
/// In-plane: (in_track, radial_in_plane). Out-of-plane: all three local axes.
enum class Direction { InTrack, InPlane, OutOfPlane };
enum class Timing { Fixed, Auto };

std::size_t dimension(Direction d);

/// Optimizer-side description of one burn: local-frame dv scalars (m/s)
/// plus the burn epoch (days).
struct ManeuverParam {
    Direction direction = Direction::InTrack;
    Timing timing = Timing::Fixed;
    std::vector<double> values;
    double epoch = 0.0;
};

struct GridSearchConfig {
    double dv_max = 1.0;          // m/s
    int grid_points = 201;        // odd, symmetric about zero
    int periods_before = 0;       // burn at TCA - (n + 0.5) T
    int max_maneuvers = 5;        // baseline restart cap
};

void validate(const GridSearchConfig& cfg);

struct SolverConfig {
    GridSearchConfig grid;
    CrossEntropyConfig ce;
};

struct Solution {
    std::vector<Maneuver> maneuvers;
    SessionResult result;
    /// Best-ever reward after each CE iteration; empty for grid search.
    std::vector<double> best_history;
};

/// Local-frame scalars to an inertial dv, using the frame of `base` at the
/// burn epoch. Throws DomainError if |dv| exceeds dv_max.
Maneuver decode(const ManeuverParam& param, const Trajectory& base, double dv_max);

/// Symmetric grid of `points` values in [-limit, limit] containing 0.
std::vector<double> symmetric_grid(double limit, int points);

/// One in-track burn at TCA_first - (n + 0.5) T taking every debris into
/// account. Returns no maneuver when nothing is dangerous.
Solution grid_search_general(const Environment& env, const GridSearchConfig& cfg);

/// Repeated single-target grid search: deflect from the earliest remaining
/// dangerous conjunction, re-screen, repeat.
Solution grid_search_baseline(const Environment& env, const GridSearchConfig& cfg);

struct TimingBounds {
    double lo = 0.0;
    double hi = 0.0;
};

/// [window start, first dangerous TCA - 60 s]. Throws DomainError when
/// empty or when nothing is dangerous.
TimingBounds auto_timing_bounds(const Environment& env);

/// Cross-entropy search over one burn starting from `init`. For Auto timing
/// the epoch is searched inside auto_timing_bounds(env).
Solution cross_entropy(const Environment& env, const ManeuverParam& init, const CrossEntropyConfig& cfg,
                       double dv_max);

/// Grid search followed by in-plane cross-entropy tuning at the GS epoch.
Solution gs_ce(const Environment& env, const GridSearchConfig& gs_cfg, const CrossEntropyConfig& ce_cfg);

enum class Algorithm {
    Baseline,
    GridSearch,
    GsCe,
    CeInTrackHalf,
    CeInPlaneHalf,
    CeOutOfPlaneHalf,
    CeInTrackAuto,
    CeInPlaneAuto,
    CeOutOfPlaneAuto,
};

inline constexpr std::array<Algorithm, 9> kAllAlgorithms = {
    Algorithm::Baseline,      Algorithm::GridSearch,       Algorithm::GsCe,
    Algorithm::CeInTrackHalf, Algorithm::CeInPlaneHalf,    Algorithm::CeOutOfPlaneHalf,
    Algorithm::CeInTrackAuto, Algorithm::CeInPlaneAuto,    Algorithm::CeOutOfPlaneAuto,
};

std::string_view algorithm_id(Algorithm a);
/// Throws InputError for unknown identifiers.
Algorithm parse_algorithm(std::string_view id);

/// Runs one named algorithm. CE-based algorithms start from a zero burn
/// half a period before the first dangerous conjunction.
Solution solve(const Environment& env, Algorithm algorithm, const SolverConfig& cfg);

}  // namespace camopt
