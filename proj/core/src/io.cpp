#include "camopt/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <system_error>

namespace camopt {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what)
{
    throw InputError(context + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& context)
{
    if (!j.is_object())
        fail(context, "expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(context, std::string("missing key \"") + key + "\"");
    return *it;
}

double number(const Json& j, const char* key, const std::string& context)
{
    const Json& v = member(j, key, context);
    if (!v.is_number())
        fail(context, std::string("\"") + key + "\" must be a number");
    return v.get<double>();
}

std::string text(const Json& j, const char* key, const std::string& context)
{
    const Json& v = member(j, key, context);
    if (!v.is_string())
        fail(context, std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

bool boolean(const Json& j, const char* key, const std::string& context)
{
    const Json& v = member(j, key, context);
    if (!v.is_boolean())
        fail(context, std::string("\"") + key + "\" must be a boolean");
    return v.get<bool>();
}

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& context)
{
    if (!j.is_object())
        fail(context, "expected an object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            known = known || key == a;
        if (!known)
            fail(context, "unknown key \"" + key + "\"");
    }
}

// Optional-field readers for the config document.
void opt(const Json& j, const char* key, double& out, const std::string& context)
{
    if (j.contains(key))
        out = number(j, key, context);
}

void opt(const Json& j, const char* key, bool& out, const std::string& context)
{
    if (j.contains(key))
        out = boolean(j, key, context);
}

void opt(const Json& j, const char* key, int& out, const std::string& context)
{
    if (!j.contains(key))
        return;
    const Json& v = j.at(key);
    if (!v.is_number_integer())
        fail(context, std::string("\"") + key + "\" must be an integer");
    out = v.get<int>();
}

void opt(const Json& j, const char* key, std::uint64_t& out, const std::string& context)
{
    if (!j.contains(key))
        return;
    const Json& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        fail(context, std::string("\"") + key + "\" must be a non-negative integer");
    out = v.get<std::uint64_t>();
}

void opt(const Json& j, const char* key, std::optional<double>& out, const std::string& context)
{
    if (!j.contains(key))
        return;
    if (j.at(key).is_null())
        out.reset();
    else
        out = number(j, key, context);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

std::vector<std::vector<std::string>> parse_csv(std::string_view csv)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t k = 0; k < csv.size(); ++k) {
        const char c = csv[k];
        if (quoted) {
            if (c == '"' && k + 1 < csv.size() && csv[k + 1] == '"') {
                field += '"';
                ++k;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && k + 1 < csv.size() && csv[k + 1] == '\n')
                ++k;
            if (any || !field.empty()) {
                row.push_back(std::move(field));
                rows.push_back(std::move(row));
            }
            row.clear();
            field.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted)
        throw InputError("csv: unterminated quote");
    if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

double parse_double(const std::string& s, const std::string& context)
{
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        fail(context, "not a number: \"" + s + "\"");
    return v;
}

Json deviations_to_json(const Deviations& d)
{
    return {{"a", d.a},       {"e", d.e},       {"i", d.i},
            {"raan", d.raan}, {"argp", d.argp}, {"mean_anomaly", d.mean_anomaly}};
}

Deviations deviations_from_json(const Json& j, const std::string& ctx)
{
    return {number(j, "a", ctx),    number(j, "e", ctx),    number(j, "i", ctx),
            number(j, "raan", ctx), number(j, "argp", ctx), number(j, "mean_anomaly", ctx)};
}

Json breakdown_to_json(const RewardBreakdown& r)
{
    return {{"collision_probability", r.collision_probability},
            {"fuel", r.fuel},
            {"dev_a", r.dev_a},
            {"dev_e", r.dev_e},
            {"dev_i", r.dev_i},
            {"dev_raan", r.dev_raan},
            {"dev_argp", r.dev_argp},
            {"dev_mean_anomaly", r.dev_mean_anomaly},
            {"total", r.total}};
}

RewardBreakdown breakdown_from_json(const Json& j, const std::string& ctx)
{
    RewardBreakdown r;
    r.collision_probability = number(j, "collision_probability", ctx);
    r.fuel = number(j, "fuel", ctx);
    r.dev_a = number(j, "dev_a", ctx);
    r.dev_e = number(j, "dev_e", ctx);
    r.dev_i = number(j, "dev_i", ctx);
    r.dev_raan = number(j, "dev_raan", ctx);
    r.dev_argp = number(j, "dev_argp", ctx);
    r.dev_mean_anomaly = number(j, "dev_mean_anomaly", ctx);
    r.total = number(j, "total", ctx);
    return r;
}

}  // namespace

std::string format_number(double v)
{
    if (!std::isfinite(v))
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ec == std::errc() ? ptr : buf);
}

Json object_to_json(const SpaceObject& obj)
{
    const auto& el = obj.elements;
    return {{"name", obj.name},
            {"a", el.a},
            {"e", el.e},
            {"i", el.i},
            {"raan", el.raan},
            {"argp", el.argp},
            {"mean_anomaly", el.mean_anomaly},
            {"epoch", el.epoch},
            {"radius", obj.radius},
            {"pos_sigma", obj.pos_sigma}};
}

SpaceObject object_from_json(const Json& j)
{
    std::string ctx = "space object";
    SpaceObject obj;
    obj.name = text(j, "name", ctx);
    ctx += " \"" + obj.name + "\"";
    obj.elements.a = number(j, "a", ctx);
    obj.elements.e = number(j, "e", ctx);
    obj.elements.i = number(j, "i", ctx);
    obj.elements.raan = number(j, "raan", ctx);
    obj.elements.argp = number(j, "argp", ctx);
    obj.elements.mean_anomaly = number(j, "mean_anomaly", ctx);
    obj.elements.epoch = number(j, "epoch", ctx);
    obj.radius = number(j, "radius", ctx);
    obj.pos_sigma = number(j, "pos_sigma", ctx);
    return obj;
}

Json situation_to_json(const DangerousSituation& s)
{
    Json debris = Json::array();
    for (const auto& d : s.debris)
        debris.push_back(object_to_json(d));
    return {{"window", {{"start", s.window.start}, {"end", s.window.end}}},
            {"protected", object_to_json(s.protected_object)},
            {"debris", std::move(debris)}};
}

DangerousSituation situation_from_json(const Json& j)
{
    const std::string ctx = "situation";
    DangerousSituation s;
    const Json& window = member(j, "window", ctx);
    s.window.start = number(window, "start", ctx + " window");
    s.window.end = number(window, "end", ctx + " window");
    s.protected_object = object_from_json(member(j, "protected", ctx));
    const Json& debris = member(j, "debris", ctx);
    if (!debris.is_array())
        fail(ctx, "\"debris\" must be an array");
    for (const auto& d : debris)
        s.debris.push_back(object_from_json(d));
    try {
        validate(s);
    } catch (const InputError& e) {
        fail(ctx, e.what());
    }
    return s;
}

Json maneuvers_to_json(std::span<const Maneuver> maneuvers)
{
    Json out = Json::array();
    for (const auto& m : maneuvers)
        out.push_back({{"dvx", m.dv.x()}, {"dvy", m.dv.y()}, {"dvz", m.dv.z()}, {"epoch", m.epoch}});
    return out;
}

std::vector<Maneuver> maneuvers_from_json(const Json& j)
{
    const std::string ctx = "maneuvers";
    if (!j.is_array())
        fail(ctx, "expected an array");
    std::vector<Maneuver> out;
    for (const auto& m : j) {
        Maneuver mv;
        mv.dv = Vec3(number(m, "dvx", ctx), number(m, "dvy", ctx), number(m, "dvz", ctx));
        mv.epoch = number(m, "epoch", ctx);
        if (!mv.dv.allFinite() || !std::isfinite(mv.epoch))
            fail(ctx, "non-finite value");
        out.push_back(mv);
    }
    return out;
}

Json conjunctions_to_json(std::span<const Conjunction> conjunctions)
{
    Json out = Json::array();
    for (const auto& c : conjunctions)
        out.push_back({{"debris_name", c.debris_name},
                       {"miss_distance", c.miss_distance},
                       {"epoch", c.epoch},
                       {"probability", c.probability},
                       {"danger", c.danger}});
    return out;
}

std::vector<Conjunction> conjunctions_from_json(const Json& j)
{
    const std::string ctx = "conjunctions";
    if (!j.is_array())
        fail(ctx, "expected an array");
    std::vector<Conjunction> out;
    for (const auto& c : j)
        out.push_back({text(c, "debris_name", ctx), number(c, "miss_distance", ctx), number(c, "epoch", ctx),
                       number(c, "probability", ctx), boolean(c, "danger", ctx)});
    return out;
}

std::string conjunctions_to_csv(std::span<const Conjunction> conjunctions)
{
    std::string csv = "debris name,miss distance (m),epoch (mjd2000),collision probability,collision danger\n";
    for (const auto& c : conjunctions) {
        csv += csv_field(c.debris_name) + ',' + format_number(c.miss_distance) + ',' + format_number(c.epoch) +
               ',' + format_number(c.probability) + ',' + (c.danger ? "True" : "False") + '\n';
    }
    return csv;
}

std::vector<Conjunction> conjunctions_from_csv(std::string_view csv)
{
    const std::string ctx = "conjunction csv";
    const auto rows = parse_csv(csv);
    if (rows.empty())
        fail(ctx, "missing header");
    std::vector<Conjunction> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& f = rows[r];
        if (f.size() != 5)
            fail(ctx, "row " + std::to_string(r) + " does not have 5 fields");
        if (f[4] != "True" && f[4] != "False")
            fail(ctx, "danger must be True or False");
        out.push_back({f[0], parse_double(f[1], ctx), parse_double(f[2], ctx), parse_double(f[3], ctx),
                       f[4] == "True"});
    }
    return out;
}

Json session_result_to_json(const SessionResult& r)
{
    return {{"total_probability", r.total_probability},
            {"fuel", r.fuel},
            {"deviations", deviations_to_json(r.deviations)},
            {"conjunctions", conjunctions_to_json(r.conjunctions)},
            {"reward", breakdown_to_json(r.reward)}};
}

SessionResult session_result_from_json(const Json& j)
{
    const std::string ctx = "session result";
    SessionResult r;
    r.total_probability = number(j, "total_probability", ctx);
    r.fuel = number(j, "fuel", ctx);
    r.deviations = deviations_from_json(member(j, "deviations", ctx), ctx);
    r.conjunctions = conjunctions_from_json(member(j, "conjunctions", ctx));
    r.reward = breakdown_from_json(member(j, "reward", ctx), ctx);
    return r;
}

std::vector<MetricsRow> metrics_from_csv(std::string_view csv)
{
    const std::string ctx = "metrics csv";
    const auto rows = parse_csv(csv);
    if (rows.empty())
        fail(ctx, "missing header");
    auto optional_pct = [&](const std::string& s) -> std::optional<double> {
        if (s == "-")
            return std::nullopt;
        return parse_double(s, ctx);
    };
    std::vector<MetricsRow> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& f = rows[r];
        if (f.size() != 8)
            fail(ctx, "row " + std::to_string(r) + " does not have 8 fields");
        MetricsRow m;
        m.algorithm = f[0];
        m.top10_pct = parse_double(f[1], ctx);
        m.leq_thr_pct = parse_double(f[2], ctx);
        m.overcome_baseline_pct = optional_pct(f[3]);
        m.overcome_gs_pct = optional_pct(f[4]);
        m.pc_leq_1e4_pct = parse_double(f[5], ctx);
        m.pc_leq_2e4_pct = parse_double(f[6], ctx);
        m.pc_leq_1e3_pct = parse_double(f[7], ctx);
        out.push_back(std::move(m));
    }
    return out;
}

Json run_config_to_json(const RunConfig& cfg)
{
    const auto& th = cfg.reward.thresholds;
    Json reward = {{"thresholds",
                    {{"collision_probability", th.collision_probability},
                     {"fuel", th.fuel},
                     {"dev_a", th.dev_a},
                     {"dev_e", th.dev_e},
                     {"dev_i", th.dev_i},
                     {"dev_raan", th.dev_raan},
                     {"dev_argp", th.dev_argp},
                     {"dev_mean_anomaly", th.dev_mean_anomaly}}},
                   {"below_slope_scale", cfg.reward.below_slope_scale},
                   {"above_slope_scale", cfg.reward.above_slope_scale},
                   {"penalize_mean_anomaly", cfg.reward.penalize_mean_anomaly}};

    auto opt_number = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    Json model = {{"method", to_string(cfg.model.method)},
                  {"sigma_protected", opt_number(cfg.model.sigma_protected)},
                  {"sigma_debris", opt_number(cfg.model.sigma_debris)}};

    const auto& sc = cfg.screening;
    Json screening = {{"screen_distance", sc.screen_distance},
                      {"samples_per_period", sc.samples_per_period},
                      {"tca_tolerance_s", sc.tca_tolerance_s},
                      {"duplicate_fraction", sc.duplicate_fraction}};

    const auto& g = cfg.solver.grid;
    const auto& ce = cfg.solver.ce;
    Json solver = {{"grid",
                    {{"dv_max", g.dv_max},
                     {"grid_points", g.grid_points},
                     {"periods_before", g.periods_before},
                     {"max_maneuvers", g.max_maneuvers}}},
                   {"cross_entropy",
                    {{"population", ce.population},
                     {"elite_fraction", ce.elite_fraction},
                     {"iterations", ce.iterations},
                     {"initial_sigma_fraction", ce.initial_sigma_fraction},
                     {"timing_sigma_fraction", ce.timing_sigma_fraction},
                     {"learning_rate", ce.learning_rate},
                     {"sigma_decay", ce.sigma_decay},
                     {"sigma_floor_fraction", ce.sigma_floor_fraction},
                     {"restarts", ce.restarts},
                     {"seed", ce.rng_seed}}}};

    Json metrics = {{"top_fraction", cfg.metrics.top_fraction},
                    {"top_relative", cfg.metrics.top_relative},
                    {"pc_bounds", cfg.metrics.pc_bounds}};

    const auto& gen = cfg.generator;
    Json generator = {{"n_debris", gen.n_debris},
                      {"protected_a_min", gen.protected_a_min},
                      {"protected_a_max", gen.protected_a_max},
                      {"protected_e_max", gen.protected_e_max},
                      {"protected_radius_min", gen.protected_radius_min},
                      {"protected_radius_max", gen.protected_radius_max},
                      {"plane_angle_min", gen.plane_angle_min},
                      {"plane_angle_max", gen.plane_angle_max},
                      {"first_offset_sigma", gen.first_offset_sigma},
                      {"other_offset_sigma", gen.other_offset_sigma},
                      {"speed_sigma", gen.speed_sigma},
                      {"debris_radius_min", gen.debris_radius_min},
                      {"debris_radius_max", gen.debris_radius_max},
                      {"first_conjunction_epoch", gen.first_conjunction_epoch},
                      {"horizon_after_first_s", gen.horizon_after_first_s},
                      {"pos_sigma", gen.pos_sigma},
                      {"screen_distance", gen.screen_distance},
                      {"seed", gen.seed}};

    return {{"reward", std::move(reward)},
            {"model", std::move(model)},
            {"screening", std::move(screening)},
            {"solver", std::move(solver)},
            {"metrics", std::move(metrics)},
            {"generator", std::move(generator)},
            {"results_dir", cfg.results_dir ? Json(*cfg.results_dir) : Json(nullptr)}};
}

RunConfig run_config_from_json(const Json& j)
{
    RunConfig cfg;
    only_keys(j, {"reward", "model", "screening", "solver", "metrics", "generator", "results_dir"}, "config");

    if (j.contains("reward")) {
        const Json& r = j.at("reward");
        const std::string ctx = "config.reward";
        only_keys(r, {"thresholds", "below_slope_scale", "above_slope_scale", "penalize_mean_anomaly"}, ctx);
        if (r.contains("thresholds")) {
            const Json& t = r.at("thresholds");
            const std::string tctx = ctx + ".thresholds";
            only_keys(t, {"collision_probability", "fuel", "dev_a", "dev_e", "dev_i", "dev_raan", "dev_argp",
                          "dev_mean_anomaly"},
                      tctx);
            auto& th = cfg.reward.thresholds;
            opt(t, "collision_probability", th.collision_probability, tctx);
            opt(t, "fuel", th.fuel, tctx);
            opt(t, "dev_a", th.dev_a, tctx);
            opt(t, "dev_e", th.dev_e, tctx);
            opt(t, "dev_i", th.dev_i, tctx);
            opt(t, "dev_raan", th.dev_raan, tctx);
            opt(t, "dev_argp", th.dev_argp, tctx);
            opt(t, "dev_mean_anomaly", th.dev_mean_anomaly, tctx);
        }
        opt(r, "below_slope_scale", cfg.reward.below_slope_scale, ctx);
        opt(r, "above_slope_scale", cfg.reward.above_slope_scale, ctx);
        opt(r, "penalize_mean_anomaly", cfg.reward.penalize_mean_anomaly, ctx);
    }

    if (j.contains("model")) {
        const Json& m = j.at("model");
        const std::string ctx = "config.model";
        only_keys(m, {"method", "sigma_protected", "sigma_debris"}, ctx);
        if (m.contains("method")) {
            try {
                cfg.model.method = method_from_string(text(m, "method", ctx));
            } catch (const std::exception& e) {
                fail(ctx, e.what());
            }
        }
        opt(m, "sigma_protected", cfg.model.sigma_protected, ctx);
        opt(m, "sigma_debris", cfg.model.sigma_debris, ctx);
    }

    if (j.contains("screening")) {
        const Json& s = j.at("screening");
        const std::string ctx = "config.screening";
        only_keys(s, {"screen_distance", "samples_per_period", "tca_tolerance_s", "duplicate_fraction"}, ctx);
        opt(s, "screen_distance", cfg.screening.screen_distance, ctx);
        opt(s, "samples_per_period", cfg.screening.samples_per_period, ctx);
        opt(s, "tca_tolerance_s", cfg.screening.tca_tolerance_s, ctx);
        opt(s, "duplicate_fraction", cfg.screening.duplicate_fraction, ctx);
    }

    if (j.contains("solver")) {
        const Json& s = j.at("solver");
        const std::string ctx = "config.solver";
        only_keys(s, {"grid", "cross_entropy"}, ctx);
        if (s.contains("grid")) {
            const Json& g = s.at("grid");
            const std::string gctx = ctx + ".grid";
            only_keys(g, {"dv_max", "grid_points", "periods_before", "max_maneuvers"}, gctx);
            opt(g, "dv_max", cfg.solver.grid.dv_max, gctx);
            opt(g, "grid_points", cfg.solver.grid.grid_points, gctx);
            opt(g, "periods_before", cfg.solver.grid.periods_before, gctx);
            opt(g, "max_maneuvers", cfg.solver.grid.max_maneuvers, gctx);
        }
        if (s.contains("cross_entropy")) {
            const Json& c = s.at("cross_entropy");
            const std::string cctx = ctx + ".cross_entropy";
            only_keys(c, {"population", "elite_fraction", "iterations", "initial_sigma_fraction",
                          "timing_sigma_fraction", "learning_rate", "sigma_decay", "sigma_floor_fraction",
                          "restarts", "seed"},
                      cctx);
            auto& ce = cfg.solver.ce;
            opt(c, "population", ce.population, cctx);
            opt(c, "elite_fraction", ce.elite_fraction, cctx);
            opt(c, "iterations", ce.iterations, cctx);
            opt(c, "initial_sigma_fraction", ce.initial_sigma_fraction, cctx);
            opt(c, "timing_sigma_fraction", ce.timing_sigma_fraction, cctx);
            opt(c, "learning_rate", ce.learning_rate, cctx);
            opt(c, "sigma_decay", ce.sigma_decay, cctx);
            opt(c, "sigma_floor_fraction", ce.sigma_floor_fraction, cctx);
            opt(c, "restarts", ce.restarts, cctx);
            opt(c, "seed", ce.rng_seed, cctx);
        }
    }

    if (j.contains("metrics")) {
        const Json& m = j.at("metrics");
        const std::string ctx = "config.metrics";
        only_keys(m, {"top_fraction", "top_relative", "pc_bounds"}, ctx);
        opt(m, "top_fraction", cfg.metrics.top_fraction, ctx);
        opt(m, "top_relative", cfg.metrics.top_relative, ctx);
        if (m.contains("pc_bounds")) {
            const Json& b = m.at("pc_bounds");
            if (!b.is_array() || b.size() != 3)
                fail(ctx, "\"pc_bounds\" must be an array of 3 numbers");
            for (std::size_t k = 0; k < 3; ++k) {
                if (!b[k].is_number())
                    fail(ctx, "\"pc_bounds\" must be an array of 3 numbers");
                cfg.metrics.pc_bounds[k] = b[k].get<double>();
            }
        }
    }

    if (j.contains("generator")) {
        const Json& g = j.at("generator");
        const std::string ctx = "config.generator";
        only_keys(g, {"n_debris", "protected_a_min", "protected_a_max", "protected_e_max", "protected_radius_min",
                      "protected_radius_max", "plane_angle_min", "plane_angle_max", "first_offset_sigma",
                      "other_offset_sigma", "speed_sigma", "debris_radius_min", "debris_radius_max",
                      "first_conjunction_epoch", "horizon_after_first_s", "pos_sigma", "screen_distance", "seed"},
                  ctx);
        auto& gen = cfg.generator;
        opt(g, "n_debris", gen.n_debris, ctx);
        opt(g, "protected_a_min", gen.protected_a_min, ctx);
        opt(g, "protected_a_max", gen.protected_a_max, ctx);
        opt(g, "protected_e_max", gen.protected_e_max, ctx);
        opt(g, "protected_radius_min", gen.protected_radius_min, ctx);
        opt(g, "protected_radius_max", gen.protected_radius_max, ctx);
        opt(g, "plane_angle_min", gen.plane_angle_min, ctx);
        opt(g, "plane_angle_max", gen.plane_angle_max, ctx);
        opt(g, "first_offset_sigma", gen.first_offset_sigma, ctx);
        opt(g, "other_offset_sigma", gen.other_offset_sigma, ctx);
        opt(g, "speed_sigma", gen.speed_sigma, ctx);
        opt(g, "debris_radius_min", gen.debris_radius_min, ctx);
        opt(g, "debris_radius_max", gen.debris_radius_max, ctx);
        opt(g, "first_conjunction_epoch", gen.first_conjunction_epoch, ctx);
        opt(g, "horizon_after_first_s", gen.horizon_after_first_s, ctx);
        opt(g, "pos_sigma", gen.pos_sigma, ctx);
        opt(g, "screen_distance", gen.screen_distance, ctx);
        opt(g, "seed", gen.seed, ctx);
    }

    if (j.contains("results_dir")) {
        const Json& r = j.at("results_dir");
        if (r.is_null())
            cfg.results_dir.reset();
        else
            cfg.results_dir = text(j, "results_dir", "config");
    }

    try {
        validate(cfg.reward);
        validate(cfg.solver.grid);
        validate(cfg.solver.ce);
        validate(cfg.generator);
    } catch (const InputError& e) {
        fail("config", e.what());
    }
    return cfg;
}

void override_seed(RunConfig& cfg, std::uint64_t seed)
{
    cfg.solver.ce.rng_seed = seed;
    cfg.generator.seed = seed;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::filesystem::path& path)
{
    const std::string content = read_text_file(path);
    try {
        return Json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path.string() + ": malformed JSON: " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw InputError("cannot write " + path.string());
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace camopt
