#include "cli.hpp"

#include "camopt/bench.hpp"
#include "camopt/fixtures.hpp"
#include "camopt/generator.hpp"
#include "camopt/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace camopt::cli {

namespace fs = std::filesystem;

namespace {

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
};

RunConfig load_config(const Common& c)
{
    std::string path = c.config;
    if (path.empty())
        if (const char* env = std::getenv(kConfigEnv); env && *env)
            path = env;
    RunConfig cfg = path.empty() ? RunConfig{} : run_config_from_json(read_json_file(path));
    if (c.seed)
        override_seed(cfg, *c.seed);
    return cfg;
}

void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-")
        out << text;
    else
        write_text_file(path, text);
}

void ensure_directory(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw InputError("cannot create directory " + dir.string());
}

std::vector<Maneuver> read_maneuvers(const std::string& path)
{
    const Json j = read_json_file(path);
    if (j.is_object() && j.contains("maneuvers"))
        return maneuvers_from_json(j.at("maneuvers"));
    return maneuvers_from_json(j);
}

std::vector<Algorithm> parse_algorithm_list(const std::string& list)
{
    if (list.empty() || list == "all")
        return {kAllAlgorithms.begin(), kAllAlgorithms.end()};
    std::vector<Algorithm> out;
    std::stringstream ss(list);
    std::string id;
    while (std::getline(ss, id, ','))
        if (!id.empty())
            out.push_back(parse_algorithm(id));
    if (out.empty())
        throw InputError("no algorithm given");
    return out;
}

Json history_json(const std::vector<double>& h)
{
    Json out = Json::array();
    for (double v : h)
        out.push_back(v);
    return out;
}

// -- commands ---------------------------------------------------------------

void cmd_generate(int count, const std::optional<int>& debris, const std::string& out_dir, const Common& common)
{
    RunConfig cfg = load_config(common);
    if (debris)
        cfg.generator.n_debris = *debris;
    if (count < 0)
        throw InputError("--count must be non-negative");
    validate(cfg.generator);
    ensure_directory(out_dir);
    for (int k = 0; k < count; ++k) {
        const DangerousSituation s = generate_situation(cfg.generator, static_cast<std::uint64_t>(k));
        write_text_file(fs::path(out_dir) / ("situation_" + std::to_string(k) + ".json"),
                        dump(situation_to_json(s)));
    }
}

void cmd_solve(const std::string& situation_path, const std::string& algorithm_id_str, const std::string& out_path,
               const Common& common, std::ostream& out)
{
    const RunConfig cfg = load_config(common);
    const Algorithm alg = parse_algorithm(algorithm_id_str);
    const DangerousSituation s = situation_from_json(read_json_file(situation_path));
    const Environment env(s, cfg.reward, cfg.model, cfg.screening);
    const Solution sol = solve(env, alg, cfg.solver);

    Json doc = {{"algorithm", std::string(algorithm_id(alg))},
                {"maneuvers", maneuvers_to_json(sol.maneuvers)},
                {"result", session_result_to_json(sol.result)},
                {"conjunctions_before", conjunctions_to_json(env.nominal().conjunctions)},
                {"conjunctions_after", conjunctions_to_json(sol.result.conjunctions)},
                {"best_history", history_json(sol.best_history)}};
    emit(out_path, dump(doc), out);
}

void cmd_conjunctions(const std::string& situation_path, const std::string& maneuvers_path,
                      const std::string& format, const std::string& out_path, const Common& common,
                      std::ostream& out)
{
    const RunConfig cfg = load_config(common);
    const DangerousSituation s = situation_from_json(read_json_file(situation_path));
    std::vector<Maneuver> maneuvers;
    if (!maneuvers_path.empty())
        maneuvers = read_maneuvers(maneuvers_path);
    const SessionResult r = run_session(s, maneuvers, cfg.reward, cfg.model, cfg.screening);
    emit(out_path, format == "csv" ? conjunctions_to_csv(r.conjunctions) : dump(conjunctions_to_json(r.conjunctions)),
         out);
}

void cmd_evaluate(const std::string& dir, const std::string& algorithms, const std::string& out_path,
                  const std::string& results_dir_opt, const Common& common, std::ostream& out)
{
    RunConfig cfg = load_config(common);
    if (!results_dir_opt.empty())
        cfg.results_dir = results_dir_opt;

    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw InputError("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    if (files.empty())
        throw InputError("no situation files in " + dir);
    std::sort(files.begin(), files.end());

    std::vector<std::pair<std::string, DangerousSituation>> situations;
    for (const auto& f : files)
        situations.emplace_back(f.stem().string(), situation_from_json(read_json_file(f)));

    BenchmarkConfig bcfg;
    bcfg.solver = cfg.solver;
    bcfg.reward = cfg.reward;
    bcfg.model = cfg.model;
    bcfg.screening = cfg.screening;
    bcfg.metrics = cfg.metrics;
    const BenchmarkResult res = run_benchmark(situations, parse_algorithm_list(algorithms), bcfg);

    if (cfg.results_dir) {
        const auto& m = res.matrix;
        for (std::size_t s = 0; s < m.situations.size(); ++s) {
            const fs::path sub = fs::path(*cfg.results_dir) / m.situations[s];
            ensure_directory(sub);
            for (std::size_t a = 0; a < m.algorithms.size(); ++a) {
                const CellResult& cell = m.cells[s][a];
                Json doc = {{"situation", m.situations[s]}, {"algorithm", m.algorithms[a]}, {"ok", cell.ok}};
                if (cell.ok) {
                    doc["maneuvers"] = maneuvers_to_json(cell.maneuvers);
                    doc["result"] = session_result_to_json(cell.result);
                } else {
                    doc["error"] = cell.error;
                }
                write_text_file(sub / (m.algorithms[a] + ".json"), dump(doc));
            }
        }
    }
    emit(out_path, metrics_csv(res.metrics), out);
}

void cmd_reward_curve(double threshold, double max_value, int points, const std::string& out_path,
                      const Common& common, std::ostream& out)
{
    const RunConfig cfg = load_config(common);
    if (!(threshold > 0.0) || !std::isfinite(threshold))
        throw InputError("--threshold must be positive");
    if (!(max_value >= 0.0) || !std::isfinite(max_value))
        throw InputError("--max must be non-negative");
    if (points < 2)
        throw InputError("--points must be at least 2");

    std::set<double> values;
    for (int k = 0; k < points; ++k)
        values.insert(max_value * k / (points - 1));
    values.insert(threshold);

    std::string csv = "value,penalty\n";
    for (double v : values)
        csv += format_number(v) + ',' +
               format_number(component_reward(v, threshold, cfg.reward.below_slope_scale,
                                              cfg.reward.above_slope_scale)) +
               '\n';
    emit(out_path, csv, out);
}

void cmd_export_golden(const std::string& out_path, std::ostream& out)
{
    emit(out_path, dump(situation_to_json(load_golden().situation)), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Collision-avoidance maneuver optimisation toolkit", "camopt"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config, "RunConfig JSON (default: $CAMOPT_CONFIG)");
        sub->add_option("--seed", common.seed, "Override every seed of the config");
    };

    int count = 0;
    std::optional<int> debris;
    std::string out_path, situation, algorithm, maneuvers, format = "json", situations_dir, algorithms, results_dir;
    double threshold = 0.0, max_value = 0.0;
    int points = 101;

    auto* gen = app.add_subcommand("generate", "Write random dangerous situations");
    gen->add_option("--count", count, "Number of situations")->required();
    gen->add_option("--out", out_path, "Output directory")->required();
    gen->add_option("--debris", debris, "Debris objects per situation");
    add_common(gen);

    auto* sol = app.add_subcommand("solve", "Find an avoidance maneuver for one situation");
    sol->add_option("--situation", situation, "Situation JSON")->required();
    sol->add_option("--algorithm", algorithm, "Algorithm id")->required();
    sol->add_option("--out", out_path, "Output JSON (default: stdout)");
    add_common(sol);

    auto* conj = app.add_subcommand("conjunctions", "List conjunctions of a situation");
    conj->add_option("--situation", situation, "Situation JSON")->required();
    conj->add_option("--maneuvers", maneuvers, "Maneuver JSON applied before screening");
    conj->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    conj->add_option("--out", out_path, "Output file (default: stdout)");
    add_common(conj);

    auto* eval = app.add_subcommand("evaluate", "Run algorithms over a directory of situations");
    eval->add_option("--situations", situations_dir, "Directory of situation JSON files")->required();
    eval->add_option("--algorithms", algorithms, "Comma-separated ids (default: all)");
    eval->add_option("--out", out_path, "Metrics CSV (default: stdout)");
    eval->add_option("--results", results_dir, "Directory for per-cell result JSON");
    add_common(eval);

    auto* curve = app.add_subcommand("reward-curve", "Sample the reward component function");
    curve->add_option("--threshold", threshold, "Component threshold")->required();
    curve->add_option("--max", max_value, "Largest sampled value")->required();
    curve->add_option("--points", points, "Uniform samples in [0, max]");
    curve->add_option("--out", out_path, "Output CSV (default: stdout)");
    add_common(curve);

    auto* golden = app.add_subcommand("export-golden", "Write the embedded example situation");
    golden->add_option("--out", out_path, "Output JSON (default: stdout)");

    std::vector<const char*> argv{"camopt"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (gen->parsed())
            cmd_generate(count, debris, out_path, common);
        else if (sol->parsed())
            cmd_solve(situation, algorithm, out_path, common, out);
        else if (conj->parsed())
            cmd_conjunctions(situation, maneuvers, format, out_path, common, out);
        else if (eval->parsed())
            cmd_evaluate(situations_dir, algorithms, out_path, results_dir, common, out);
        else if (curve->parsed())
            cmd_reward_curve(threshold, max_value, points, out_path, common, out);
        else if (golden->parsed())
            cmd_export_golden(out_path, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace camopt::cli
