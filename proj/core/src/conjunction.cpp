#include "camopt/conjunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace camopt {

namespace {

// exp(-x) * I0(x), x >= 0.
double scaled_bessel_i0(double x)
{
    if (x <= 15.0) {
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < 1e-17 * sum)
                break;
        }
        return sum * std::exp(-x);
    }
    // Asymptotic expansion; terms shrink until k ~ 2x, far beyond what is needed.
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd / (8.0 * k * x);
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum / std::sqrt(constants::two_pi * x);
}

template <std::size_t N>
struct GaussLegendre {
    std::array<double, N> node{};
    std::array<double, N> weight{};

    GaussLegendre()
    {
        for (std::size_t i = 0; i < N; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (std::size_t k = 2; k <= N; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16)
                    break;
            }
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    template <typename F>
    double integrate(const F& f, double lo, double hi) const
    {
        const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            s += weight[i] * f(mid + half * node[i]);
        return s * half;
    }
};

const GaussLegendre<10>& gl_coarse()
{
    static const GaussLegendre<10> rule;
    return rule;
}

const GaussLegendre<20>& gl_fine()
{
    static const GaussLegendre<20> rule;
    return rule;
}

template <typename F>
double adaptive_panel(const F& f, double lo, double hi, int depth)
{
    const double coarse = gl_coarse().integrate(f, lo, hi);
    const double fine = gl_fine().integrate(f, lo, hi);
    if (depth >= 40 || std::abs(fine - coarse) <= 1e-13 * std::abs(fine) + 1e-300)
        return fine;
    const double mid = 0.5 * (lo + hi);
    return adaptive_panel(f, lo, mid, depth + 1) + adaptive_panel(f, mid, hi, depth + 1);
}

// Upper bound on the relative acceleration of two bound Earth orbiters.
// Smallest distance to the origin reached by |r0 + v*tau| for tau in [lo, hi].
double closest_linear(const Vec3& r0, const Vec3& v, double lo, double hi)
{
    const double vv = v.squaredNorm();
    const double tau = vv > 0.0 ? std::clamp(-r0.dot(v) / vv, lo, hi) : 0.0;
    return (r0 + tau * v).norm();
}

double gravity_bound(double min_radius)
{
    return constants::mu / (min_radius * min_radius);
}

Vec3 gravity(const Vec3& r)
{
    const double n = r.norm();
    return -constants::mu / (n * n * n) * r;
}

// Zero of the range rate inside [lo, hi] (days), where it goes from
// negative to non-negative. Newton steps on the analytic derivative
// v.v + r.a, falling back to bisection whenever a step leaves the bracket.
double refine_tca(const Trajectory& protected_traj, const KeplerianOrbit& orbit, double lo, double hi, double f_lo,
                  double f_hi, double tol_days)
{
    constexpr int kMaxIterations = 100;
    const double day = constants::seconds_per_day;
    double t = (f_hi > f_lo) ? lo + (hi - lo) * (-f_lo / (f_hi - f_lo)) : 0.5 * (lo + hi);
    t = std::clamp(t, lo, hi);
    // Newton steps converge well past the tolerance in one or two extra
    // evaluations; bisection only guards steps that leave the bracket.
    const double converged = 1e-3 * tol_days;
    for (int it = 0; it < kMaxIterations; ++it) {
        const StateVector p = protected_traj.state_at(t);
        const StateVector d = orbit.state_at(t);
        const Vec3 r = d.position - p.position;
        const Vec3 v = d.velocity - p.velocity;
        const double f = r.dot(v);
        const double fp = v.squaredNorm() + r.dot(gravity(d.position) - gravity(p.position));
        if (f < 0.0)
            lo = t;
        else
            hi = t;
        const double step = fp > 0.0 ? -f / fp / day : std::numeric_limits<double>::infinity();
        const double next = t + step;
        if (next >= lo && next <= hi) {
            t = next;
            if (std::abs(step) < converged)
                break;
        } else {
            t = 0.5 * (lo + hi);
        }
        if (hi - lo < converged)
            break;
    }
    return std::clamp(t, lo, hi);
}

struct Minimum {
    double epoch;
    double miss;
    Vec3 rel_pos;
    Vec3 rel_vel;
};

}  // namespace

std::string to_string(ProbabilityModel::Method m)
{
    switch (m) {
    case ProbabilityModel::Method::EncounterPlaneGaussian:
        return "encounter-plane-gaussian";
    }
    return "unknown";
}

ProbabilityModel::Method method_from_string(const std::string& s)
{
    if (s == "encounter-plane-gaussian")
        return ProbabilityModel::Method::EncounterPlaneGaussian;
    throw InputError("unknown probability method '" + s + "'");
}

double ProbabilityModel::combined_sigma(const SpaceObject& protected_obj, const SpaceObject& debris) const
{
    const double sp = sigma_protected.value_or(protected_obj.pos_sigma);
    const double sd = sigma_debris.value_or(debris.pos_sigma);
    return std::sqrt(sp * sp + sd * sd);
}

double collision_probability(double miss_distance, double hard_body_radius, double sigma)
{
    if (!(sigma > 0.0))
        throw InputError("collision_probability: sigma must be positive");
    if (!(miss_distance >= 0.0) || !(hard_body_radius >= 0.0))
        throw InputError("collision_probability: distances must be non-negative");
    if (hard_body_radius == 0.0)
        return 0.0;

    const double d = miss_distance / sigma;
    const double radius = hard_body_radius / sigma;
    // Integrand over the normalised disc radius rho; the angular integral of
    // the offset Gaussian is 2*pi*exp(-(rho^2+d^2)/2)*I0(rho*d).
    auto radial = [d](double rho) {
        const double gap = rho - d;
        return rho * std::exp(-0.5 * gap * gap) * scaled_bessel_i0(rho * d);
    };

    const int panels = std::max(1, static_cast<int>(std::ceil(radius)));
    const double width = radius / panels;
    double p = 0.0;
    for (int k = 0; k < panels; ++k)
        p += adaptive_panel(radial, k * width, (k + 1) * width, 0);
    return std::clamp(p, 0.0, 1.0);
}

double total_collision_probability(std::span<const double> probabilities)
{
    double survive = 1.0;
    for (double p : probabilities)
        survive *= (1.0 - p);
    return std::clamp(1.0 - survive, 0.0, 1.0);
}

double total_collision_probability(std::span<const Conjunction> conjunctions)
{
    double survive = 1.0;
    for (const auto& c : conjunctions)
        survive *= (1.0 - c.probability);
    return std::clamp(1.0 - survive, 0.0, 1.0);
}

DebrisField::DebrisField(std::vector<SpaceObject> debris, Window window, double protected_period_s,
                         const ScreeningOptions& options)
    : debris_(std::move(debris)), window_(window), protected_period_s_(protected_period_s), options_(options)
{
    if (!(window_.start < window_.end))
        throw InputError("screening window must satisfy start < end");
    if (!(options_.samples_per_period >= 2.0))
        throw InputError("samples_per_period must be at least 2");

    double min_period = protected_period_s_;
    orbits_.reserve(debris_.size());
    for (const auto& d : debris_) {
        orbits_.emplace_back(d.elements);
        min_period = std::min(min_period, orbital_period(d.elements.a));
    }
    step_ = min_period / options_.samples_per_period / constants::seconds_per_day;

    const auto count = static_cast<std::size_t>(std::ceil(window_.duration_days() / step_));
    times_.reserve(count + 1);
    for (std::size_t k = 0; k < count; ++k)
        times_.push_back(window_.start + static_cast<double>(k) * step_);
    times_.push_back(window_.end);

    tracks_.resize(debris_.size());
    for (std::size_t k = 0; k < debris_.size(); ++k) {
        auto& tr = tracks_[k];
        tr.position.resize(times_.size());
        tr.velocity.resize(times_.size());
        for (std::size_t i = 0; i < times_.size(); ++i) {
            const StateVector sv = orbits_[k].state_at(times_[i]);
            tr.position[i] = sv.position;
            tr.velocity[i] = sv.velocity;
        }
    }
}

TrackSamples sample_track(const Trajectory& traj, std::span<const double> times, const TrackSamples* reuse,
                          std::size_t reuse_count)
{
    TrackSamples out;
    out.position.resize(times.size());
    out.velocity.resize(times.size());
    std::size_t first = 0;
    if (reuse != nullptr) {
        first = std::min({reuse_count, times.size(), reuse->position.size()});
        std::copy_n(reuse->position.begin(), first, out.position.begin());
        std::copy_n(reuse->velocity.begin(), first, out.velocity.begin());
    }
    for (std::size_t i = first; i < times.size(); ++i) {
        const StateVector sv = traj.state_at(times[i]);
        out.position[i] = sv.position;
        out.velocity[i] = sv.velocity;
    }
    return out;
}

std::vector<Conjunction> find_conjunctions(const Trajectory& protected_traj, const SpaceObject& protected_obj,
                                           const TrackSamples& protected_samples, const DebrisField& field,
                                           const ProbabilityModel& model)
{
    const auto& opts = field.options();
    const auto& times = field.times();
    const std::size_t n = times.size();
    const double pass_separation_days =
        opts.duplicate_fraction * field.protected_period_s() / constants::seconds_per_day;
    const double tol_days = opts.tca_tolerance_s / constants::seconds_per_day;

    std::vector<Conjunction> out;
    std::vector<double> range_rate(n);

    // Lowest sampled radius, shaved so that a burn-lowered perigee between
    // samples stays covered.
    double min_radius = std::numeric_limits<double>::infinity();
    for (const auto& r : protected_samples.position)
        min_radius = std::min(min_radius, r.norm());
    const double protected_accel = gravity_bound(0.99 * min_radius);

    for (std::size_t k = 0; k < field.debris().size(); ++k) {
        const auto& track = field.track(k);
        const auto& orbit = field.orbits()[k];

        for (std::size_t i = 0; i < n; ++i)
            range_rate[i] = (track.position[i] - protected_samples.position[i])
                                .dot(track.velocity[i] - protected_samples.velocity[i]);

        std::vector<Minimum> minima;
        const double accel = protected_accel + gravity_bound(orbit.elements().a * (1.0 - orbit.elements().e));
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!(range_rate[i] < 0.0 && range_rate[i + 1] >= 0.0))
                continue;
            // Relative motion departs from a straight line by at most
            // accel * tau^2 / 2, which bounds the distance over the interval.
            const double dt = (times[i + 1] - times[i]) * constants::seconds_per_day;
            const double curvature = 0.5 * accel * dt * dt;
            const double ahead = closest_linear(track.position[i] - protected_samples.position[i],
                                                track.velocity[i] - protected_samples.velocity[i], 0.0, dt);
            const double behind = closest_linear(track.position[i + 1] - protected_samples.position[i + 1],
                                                 track.velocity[i + 1] - protected_samples.velocity[i + 1], -dt, 0.0);
            if (std::max(ahead, behind) - curvature >= opts.screen_distance)
                continue;

            const double tca = refine_tca(protected_traj, orbit, times[i], times[i + 1], range_rate[i],
                                          range_rate[i + 1], tol_days);
            const StateVector p = protected_traj.state_at(tca);
            const StateVector d = orbit.state_at(tca);
            const Vec3 rel_pos = d.position - p.position;
            minima.push_back({tca, rel_pos.norm(), rel_pos, d.velocity - p.velocity});
        }

        // One conjunction per pass.
        std::vector<Minimum> passes;
        for (const auto& m : minima) {
            if (!passes.empty() && m.epoch - passes.back().epoch < pass_separation_days) {
                if (m.miss < passes.back().miss)
                    passes.back() = m;
                continue;
            }
            passes.push_back(m);
        }

        const SpaceObject& debris = field.debris()[k];
        const double sigma = model.combined_sigma(protected_obj, debris);
        const double hard_body = protected_obj.radius + debris.radius;
        for (const auto& m : passes) {
            if (!(m.miss < opts.screen_distance))
                continue;
            // Offset in the encounter plane, orthogonal to the relative velocity.
            double plane_offset = m.miss;
            const double vn = m.rel_vel.norm();
            if (vn > 0.0) {
                const Vec3 u = m.rel_vel / vn;
                plane_offset = (m.rel_pos - m.rel_pos.dot(u) * u).norm();
            }
            Conjunction c;
            c.debris_name = debris.name;
            c.miss_distance = m.miss;
            c.epoch = m.epoch;
            c.probability = collision_probability(plane_offset, hard_body, sigma);
            c.danger = c.probability >= opts.danger_threshold;
            out.push_back(std::move(c));
        }
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const Conjunction& a, const Conjunction& b) { return a.epoch < b.epoch; });
    return out;
}

std::vector<Conjunction> find_conjunctions(const Trajectory& protected_traj, const SpaceObject& protected_obj,
                                           const std::vector<SpaceObject>& debris, Window window,
                                           const ProbabilityModel& model, const ScreeningOptions& options)
{
    const DebrisField field(debris, window, orbital_period(protected_obj.elements.a), options);
    const TrackSamples samples = sample_track(protected_traj, field.times());
    return find_conjunctions(protected_traj, protected_obj, samples, field, model);
}

}  // namespace camopt
