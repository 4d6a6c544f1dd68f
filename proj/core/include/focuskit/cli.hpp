#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "focuskit/fiber.hpp"

namespace focuskit {

enum class Command {
    classify,
    trace_fiber,
    moment_image,
    integrate,
    obstruction,
    selftest,
};

/// One reproducible analysis: identical (config, seed) pairs produce
/// byte-identical artifacts on the same platform.
struct RunConfig {
    Command command = Command::selftest;

    // system selection: builtin name, or a full JSON descriptor
    std::string system_name;
    std::string system_json;
    std::optional<Vec> casimir_values;
    std::optional<double> lambda;

    // classify
    int n_restarts = 200;

    // trace-fiber
    MomentValue moment{1.0, 0.0};
    int n_points = 2000;
    double eps_link = 0.0;  // <= 0: adaptive

    // moment-image
    MomentGrid grid;

    // integrate
    double dt = 1e-3;
    double t_end = 10.0;
    std::optional<Vec> x0;  // default: seeded draw on the orbit

    // obstruction
    std::string manifold;  // builtin name or JSON text
    int n = 2;

    std::uint64_t seed = 0;
    std::string out_path;  // empty: stdout; integrate also writes <out>.drift.json
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Dispatch the configured command, writing JSON/CSV artifacts.
/// Returns kExitOk, kExitValidation, or kExitNumerical.
int run(const RunConfig& config);

/// The aggregated property suite behind `selftest`; returns the JSON report
/// and sets all_pass.
std::string selftest_report(std::uint64_t seed, bool& all_pass);

}  // namespace focuskit
