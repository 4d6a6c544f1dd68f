// focuskit command-line tool: reproducible analyses of focus-focus
// singularities on built-in or user-supplied integrable systems.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "focuskit/cli.hpp"
#include "focuskit/descriptor.hpp"

namespace {

using focuskit::RunConfig;
using focuskit::Vec;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw focuskit::ValidationError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Vec parse_comma_list(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    return Eigen::Map<const Vec>(vals.data(), static_cast<int>(vals.size()));
}

focuskit::MomentGrid parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 5)
        throw focuskit::ValidationError("--grid expects hmin:hmax:fmin:fmax:res");
    focuskit::MomentGrid g;
    g.h_min = std::stod(parts[0]);
    g.h_max = std::stod(parts[1]);
    g.f_min = std::stod(parts[2]);
    g.f_max = std::stod(parts[3]);
    g.resolution = std::stoi(parts[4]);
    return g;
}

// The --system value is a builtin name, or a path to a JSON system descriptor.
void apply_system(RunConfig& cfg, const std::string& system) {
    if (system.empty()) return;
    if (std::ifstream probe(system); probe.good())
        cfg.system_json = read_file(system);
    else
        cfg.system_name = system;
}

RunConfig config_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw focuskit::ValidationError("--config: invalid JSON");
    RunConfig cfg;
    const std::string command = j.value("command", "selftest");
    if (command == "classify") cfg.command = focuskit::Command::classify;
    else if (command == "trace-fiber") cfg.command = focuskit::Command::trace_fiber;
    else if (command == "moment-image") cfg.command = focuskit::Command::moment_image;
    else if (command == "integrate") cfg.command = focuskit::Command::integrate;
    else if (command == "obstruction") cfg.command = focuskit::Command::obstruction;
    else if (command == "selftest") cfg.command = focuskit::Command::selftest;
    else throw focuskit::ValidationError("--config: unknown command '" + command + "'");

    if (j.contains("system")) {
        if (j["system"].is_string()) cfg.system_name = j["system"].get<std::string>();
        else cfg.system_json = j["system"].dump();
    }
    if (j.contains("casimirs")) {
        const auto v = j["casimirs"].get<std::vector<double>>();
        cfg.casimir_values = Eigen::Map<const Vec>(v.data(), static_cast<int>(v.size()));
    }
    if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
    if (j.contains("moment")) {
        const auto v = j["moment"].get<std::vector<double>>();
        if (v.size() != 2) throw focuskit::ValidationError("--config: moment needs [h, f]");
        cfg.moment = {v[0], v[1]};
    }
    if (j.contains("grid")) cfg.grid = parse_grid(j["grid"].get<std::string>());
    if (j.contains("n_points")) cfg.n_points = j["n_points"].get<int>();
    if (j.contains("n_restarts")) cfg.n_restarts = j["n_restarts"].get<int>();
    if (j.contains("eps_link")) cfg.eps_link = j["eps_link"].get<double>();
    if (j.contains("dt")) cfg.dt = j["dt"].get<double>();
    if (j.contains("t_end")) cfg.t_end = j["t_end"].get<double>();
    if (j.contains("x0")) {
        const auto v = j["x0"].get<std::vector<double>>();
        cfg.x0 = Eigen::Map<const Vec>(v.data(), static_cast<int>(v.size()));
    }
    if (j.contains("manifold")) {
        if (j["manifold"].is_string()) cfg.manifold = j["manifold"].get<std::string>();
        else cfg.manifold = j["manifold"].dump();
    }
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"focuskit: focus-focus singularity analysis for integrable "
                 "Hamiltonian systems on Poisson manifolds"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "Run config JSON file (same schema as the flags)");

    RunConfig cfg;
    std::string system, casimirs, moment, grid, manifold, x0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--system", system,
                        "Builtin system name (canonical4, remark-r4, e3-form41, "
                        "lambda-form41) or path to a JSON system descriptor");
        sub->add_option("--casimirs", casimirs, "Casimir values, e.g. 1,0");
        sub->add_option("--lambda", cfg.lambda, "Bracket family parameter");
        sub->add_option("--seed", cfg.seed, "RNG seed (fixed seed => identical artifacts)");
        sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
    };

    auto* classify = app.add_subcommand(
        "classify", "Locate rank-0 points of the moment map on the orbit and "
                    "label each by its linearization spectrum "
                    "(singularity: find_rank0_points + classify)");
    add_common(classify);
    classify->add_option("--n-restarts", cfg.n_restarts, "Newton restarts");

    auto* trace = app.add_subcommand(
        "trace-fiber", "Sample one fiber of the moment map, count its "
                       "connected components and its rank-0 points "
                       "(fiber: sample_fiber)");
    add_common(trace);
    trace->add_option("--moment", moment, "Moment value h,f");
    trace->add_option("--n-points", cfg.n_points, "Target sample size");
    trace->add_option("--eps-link", cfg.eps_link,
                      "Linking radius (<= 0: 3x median nearest-neighbour)");

    auto* image = app.add_subcommand(
        "moment-image", "Probe a grid in the (h, f) plane for fiber existence "
                        "and rank-0 counts (fiber: moment_image)");
    add_common(image);
    image->add_option("--grid", grid, "hmin:hmax:fmin:fmax:res");

    auto* integ = app.add_subcommand(
        "integrate", "Integrate the Euler equations with Casimir projection "
                     "and report invariant drift (dynamics: integrate)");
    add_common(integ);
    integ->add_option("--dt", cfg.dt, "Fixed step size");
    integ->add_option("--t-end", cfg.t_end, "Integration horizon");
    integ->add_option("--x0", x0, "Initial point x1,..,xn (default: seeded orbit draw)");

    auto* obstr = app.add_subcommand(
        "obstruction", "Evaluate the topological admissibility rules for a "
                       "manifold and complexity (obstruction: admits_complexity)");
    obstr->add_option("--manifold", manifold,
                      "Builtin name (cp2, s2xs2, s2xr2), JSON text, or JSON file path");
    obstr->add_option("--n", cfg.n, "Requested complexity");
    obstr->add_option("--seed", cfg.seed, "RNG seed");
    obstr->add_option("--out", cfg.out_path, "Output path (default: stdout)");

    auto* self = app.add_subcommand(
        "selftest", "Run the aggregated property suite (cli: selftest)");
    self->add_option("--seed", cfg.seed, "RNG seed");
    self->add_option("--out", cfg.out_path, "Output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) return focuskit::run(config_from_json(read_file(config_path)));

        if (classify->parsed()) cfg.command = focuskit::Command::classify;
        else if (trace->parsed()) cfg.command = focuskit::Command::trace_fiber;
        else if (image->parsed()) cfg.command = focuskit::Command::moment_image;
        else if (integ->parsed()) cfg.command = focuskit::Command::integrate;
        else if (obstr->parsed()) cfg.command = focuskit::Command::obstruction;
        else if (self->parsed()) cfg.command = focuskit::Command::selftest;
        else {
            std::cerr << app.help();
            return focuskit::kExitValidation;
        }

        apply_system(cfg, system);
        if (!casimirs.empty()) cfg.casimir_values = parse_comma_list(casimirs);
        if (!moment.empty()) {
            const Vec m = parse_comma_list(moment);
            if (m.size() != 2)
                throw focuskit::ValidationError("--moment expects h,f");
            cfg.moment = {m[0], m[1]};
        }
        if (!grid.empty()) cfg.grid = parse_grid(grid);
        if (!x0.empty()) cfg.x0 = parse_comma_list(x0);
        if (!manifold.empty()) {
            // file path, builtin name, or inline JSON
            if (std::ifstream probe(manifold); probe.good())
                cfg.manifold = read_file(manifold);
            else
                cfg.manifold = manifold;
        }
        return focuskit::run(cfg);
    } catch (const focuskit::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return focuskit::kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return focuskit::kExitValidation;
    }
}
