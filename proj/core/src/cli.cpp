#include "focuskit/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <iostream>

#include <json.hpp>

#include "focuskit/descriptor.hpp"
#include "focuskit/dynamics.hpp"
#include "focuskit/obstruction.hpp"
#include "focuskit/rng.hpp"
#include "focuskit/singularity.hpp"

namespace focuskit {

namespace {

using nlohmann::json;

SystemSpec resolve_system(const RunConfig& config) {
    if (!config.system_json.empty()) return parse_system_json(config.system_json);
    const std::string name =
        config.system_name.empty() ? "e3-form41" : config.system_name;
    return builtin_system(name, config.casimir_values, config.lambda);
}

void write_artifact(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output path: " + path);
    out << text;
}

// --- selftest checks -------------------------------------------------------

struct Check {
    std::string name;
    bool pass = false;
    double metric = 0.0;
};

std::vector<Monomial> random_terms(std::mt19937_64& gen, int dim) {
    std::vector<Monomial> terms;
    const int n_terms = 2 + static_cast<int>(gen() % 3);
    for (int t = 0; t < n_terms; ++t) {
        Monomial m;
        m.coeff = uniform(gen, -2.0, 2.0);
        m.exponents.assign(dim, 0);
        for (int total = 0; total < 2; ++total)
            m.exponents[gen() % dim] += static_cast<int>(gen() % 2);
        terms.push_back(std::move(m));
    }
    return terms;
}

bool spectrum_matches(const std::vector<std::complex<double>>& eigs,
                      std::vector<std::complex<double>> expected, double tol) {
    for (const auto& e : eigs) {
        auto best = expected.end();
        double best_d = tol;
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            const double d = std::abs(e - *it);
            if (d <= best_d) {
                best_d = d;
                best = it;
            }
        }
        if (best == expected.end()) return false;
        expected.erase(best);
    }
    return expected.empty();
}

Check check_involution(std::uint64_t seed) {
    Check c{"catalog_involution", true, 0.0};
    for (const auto& sys : catalog()) {
        const double d = involution_defect(sys, 200, mix64(seed ^ 0x11ULL));
        c.metric = std::max(c.metric, d);
    }
    c.pass = c.metric < 1e-10;
    return c;
}

Check check_bracket_axioms(std::uint64_t seed) {
    Check c{"bracket_axioms", true, 0.0};
    const std::vector<PoissonStructure> structures = {
        canonical_r4(), e3_structure(), so4_structure(), lambda_structure(0.1)};
    auto gen = substream(seed, 0x22ULL);
    for (const auto& ps : structures) {
        const int n = ps.dim();
        for (int trial = 0; trial < 25; ++trial) {
            const Vec x = uniform_vec(gen, n, -2.0, 2.0);
            const auto ta = random_terms(gen, n);
            const auto tb = random_terms(gen, n);
            const auto tc = random_terms(gen, n);
            const ScalarField f = make_polynomial_field(n, ta);
            const ScalarField g = make_polynomial_field(n, tb);
            const ScalarField h = make_polynomial_field(n, tc);
            // antisymmetry
            c.metric = std::max(c.metric,
                                std::abs(bracket(ps, f, g, x) + bracket(ps, g, f, x)));
            // Leibniz
            const ScalarField fg = make_polynomial_field(n, multiply_terms(ta, tb));
            c.metric = std::max(
                c.metric, std::abs(bracket(ps, fg, h, x) - f(x) * bracket(ps, g, h, x) -
                                   g(x) * bracket(ps, f, h, x)));
            // Jacobi
            c.metric = std::max(c.metric, jacobi_defect(ps, x));
        }
    }
    c.pass = c.metric < 1e-8;
    return c;
}

Check check_canonical_spectrum(std::uint64_t seed) {
    Check c{"canonical_spectrum", true, 0.0};
    const SystemSpec sys = builtin_system("canonical4");
    const Vec origin = Vec::Zero(4);
    const SingularPoint pt = classify(sys, origin, 32, seed);
    if (pt.label != SingularLabel::focus_focus) c.pass = false;
    auto gen = substream(seed, 0x33ULL);
    for (int t = 0; t < 20; ++t) {
        const double theta = uniform(gen, 0.0, 2.0 * std::numbers::pi);
        const double a = std::cos(theta), b = std::sin(theta);
        Eigen::EigenSolver<Mat> solver(linearize(sys, origin, a, b), false);
        std::vector<std::complex<double>> eigs;
        for (int i = 0; i < 4; ++i) eigs.push_back(solver.eigenvalues()[i]);
        const std::complex<double> ab(a, b);
        if (!spectrum_matches(eigs, {ab, std::conj(ab), -ab, -std::conj(ab)}, 1e-10))
            c.pass = false;
    }
    return c;
}

Check check_rank0_search(std::uint64_t seed) {
    Check c{"e3_rank0_points", false, 0.0};
    const SystemSpec sys = builtin_system("e3-form41");
    const auto pts = find_rank0_points(sys, 100, mix64(seed ^ 0x44ULL));
    c.metric = static_cast<double>(pts.size());
    c.pass = pts.size() == 2;
    for (const auto& pt : pts)
        if (pt.label != SingularLabel::focus_focus) c.pass = false;
    return c;
}

Check check_fiber(std::uint64_t seed) {
    Check c{"singular_fiber", false, 0.0};
    const SystemSpec sys = builtin_system("e3-form41");
    const FiberSample fs = sample_fiber(sys, MomentValue{1.0, 0.0}, 400,
                                        mix64(seed ^ 0x55ULL));
    c.metric = static_cast<double>(fs.complexity);
    c.pass = fs.status == FiberStatus::ok && fs.complexity == 2 &&
             fs.n_components == 1;
    return c;
}

Check check_obstruction() {
    Check c{"obstruction_rules", true, 0.0};
    auto expect = [&c](const ManifoldDescriptor& d, int n, VerdictStatus status) {
        if (admits_complexity(d, n).status != status) c.pass = false;
    };
    expect(ManifoldDescriptor::make_cp2(), 2, VerdictStatus::forbidden);
    expect(ManifoldDescriptor::make_product(1, 1), 2, VerdictStatus::forbidden);
    expect(ManifoldDescriptor::make_product(1, 0), 2, VerdictStatus::forbidden);
    expect(ManifoldDescriptor::make_product(0, 0), 2, VerdictStatus::conditional);
    expect(ManifoldDescriptor::make_product(0, 0), 3, VerdictStatus::forbidden);
    expect(ManifoldDescriptor::make_surface_times_plane(0), 2, VerdictStatus::forbidden);
    expect(ManifoldDescriptor::make_cotangent(true, 0, true), 2, VerdictStatus::conditional);
    expect(ManifoldDescriptor::make_e3_orbit(0.0), 2, VerdictStatus::conditional);
    expect(ManifoldDescriptor::make_e3_orbit(0.3), 2, VerdictStatus::forbidden);
    expect(ManifoldDescriptor::make_so4_orbit(0.0), 2, VerdictStatus::conditional);
    const auto report = consistency_check();
    c.metric = static_cast<double>(report.contradictions.size());
    if (!report.contradictions.empty()) c.pass = false;
    return c;
}

Check check_dynamics() {
    Check c{"dynamics_conservation", false, 0.0};
    const SystemSpec sys = builtin_system("e3-form41");
    Vec x0(6);
    x0 << 1.6, 1.0, -1.2, 0.6, 0.0, 0.8;  // on the (1, 0) orbit
    const Trajectory traj = integrate(sys, x0, 5.0, 1e-3);
    double casimir = 0.0;
    for (std::size_t i = 2; i < traj.drift.size(); ++i)
        casimir = std::max(casimir, traj.drift[i].max_deviation);
    c.metric = traj.drift[0].max_deviation;
    c.pass = casimir < 1e-9 && traj.drift[0].max_deviation < 1e-7 &&
             traj.drift[1].max_deviation < 1e-7;
    return c;
}

}  // namespace

std::string selftest_report(std::uint64_t seed, bool& all_pass) {
    const std::vector<Check> checks = {
        check_involution(seed),     check_bracket_axioms(seed),
        check_canonical_spectrum(seed), check_rank0_search(seed),
        check_fiber(seed),          check_obstruction(),
        check_dynamics(),
    };
    all_pass = true;
    json arr = json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"metric", c.metric}});
    }
    return json{{"seed", seed}, {"checks", arr}, {"all_pass", all_pass}}.dump(2) + "\n";
}

int run(const RunConfig& config) {
    try {
        switch (config.command) {
            case Command::classify: {
                const SystemSpec sys = resolve_system(config);
                const auto points =
                    find_rank0_points(sys, config.n_restarts, config.seed);
                write_artifact(config.out_path, singular_points_to_json(points));
                return kExitOk;
            }
            case Command::trace_fiber: {
                const SystemSpec sys = resolve_system(config);
                const FiberSample fs = sample_fiber(sys, config.moment,
                                                    config.n_points, config.seed,
                                                    config.eps_link);
                write_artifact(config.out_path, fiber_to_json(fs));
                return fs.status == FiberStatus::inconclusive ? kExitNumerical
                                                              : kExitOk;
            }
            case Command::moment_image: {
                const SystemSpec sys = resolve_system(config);
                const auto cells = moment_image(sys, config.grid, config.seed);
                write_artifact(config.out_path, moment_image_to_csv(cells));
                return kExitOk;
            }
            case Command::integrate: {
                const SystemSpec sys = resolve_system(config);
                Vec x0;
                if (config.x0) {
                    x0 = *config.x0;
                } else {
                    auto gen = substream(config.seed, 0x1717ULL);
                    x0 = sample_orbit_point(sys.orbit, gen);
                }
                const Trajectory traj = integrate(sys, x0, config.t_end, config.dt);
                write_artifact(config.out_path, trajectory_to_csv(traj));
                const std::string drift = drift_report_to_json(drift_report(traj));
                write_artifact(config.out_path.empty() ? ""
                                                       : config.out_path + ".drift.json",
                               drift);
                return kExitOk;
            }
            case Command::obstruction: {
                if (config.manifold.empty())
                    throw ValidationError("obstruction: --manifold is required");
                const ManifoldDescriptor desc = parse_manifold_json(config.manifold);
                const Verdict verdict = admits_complexity(desc, config.n);
                write_artifact(config.out_path, verdict_to_json(verdict));
                return kExitOk;
            }
            case Command::selftest: {
                bool all_pass = false;
                const std::string report = selftest_report(config.seed, all_pass);
                write_artifact(config.out_path, report);
                return all_pass ? kExitOk : kExitNumerical;
            }
        }
        throw ValidationError("unknown command");
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace focuskit
