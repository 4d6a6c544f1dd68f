#include "focuskit/dynamics.hpp"

#include <cmath>

namespace focuskit {

Trajectory integrate(const SystemSpec& sys, const Vec& x0, double t_end, double dt) {
    if (dt <= 0.0) throw ValidationError("integrate: dt must be positive");
    if (t_end <= 0.0) throw ValidationError("integrate: t_end must be positive");
    if (orbit_residual(sys.orbit, x0) >= 1e-8)
        throw ValidationError("integrate: initial point is off the orbit");

    const auto& ps = sys.orbit.structure;
    auto rhs = [&](const Vec& x) { return sgrad(ps, sys.hamiltonian, x); };

    Trajectory traj;
    const int n_steps = static_cast<int>(std::llround(t_end / dt));
    traj.times.reserve(n_steps + 1);
    traj.states.reserve(n_steps + 1);

    traj.drift.push_back({"H", sys.hamiltonian(x0), 0.0});
    traj.drift.push_back({"F", sys.integral(x0), 0.0});
    const auto& cs = ps.casimirs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        traj.drift.push_back({"casimir_" + std::to_string(i), cs[i](x0), 0.0});

    auto record = [&](double t, const Vec& x) {
        traj.times.push_back(t);
        traj.states.push_back(x);
        auto track = [&](InvariantDrift& d, double v) {
            d.max_deviation = std::max(d.max_deviation, std::abs(v - d.initial));
        };
        track(traj.drift[0], sys.hamiltonian(x));
        track(traj.drift[1], sys.integral(x));
        for (std::size_t i = 0; i < cs.size(); ++i)
            track(traj.drift[2 + i], cs[i](x));
    };

    Vec x = x0;
    record(0.0, x);
    for (int step = 1; step <= n_steps; ++step) {
        const Vec k1 = rhs(x);
        const Vec k2 = rhs(x + 0.5 * dt * k1);
        const Vec k3 = rhs(x + 0.5 * dt * k2);
        const Vec k4 = rhs(x + dt * k3);
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!cs.empty()) {
            auto projected = project_to_orbit(sys.orbit, x);
            if (!projected)
                throw NumericalError("integrate: Casimir projection diverged (step too large)");
            x = *projected;
        }
        record(step * dt, x);
    }
    return traj;
}

std::vector<DriftReportRow> drift_report(const Trajectory& traj) {
    if (traj.times.empty()) throw ValidationError("drift_report: empty trajectory");
    std::vector<DriftReportRow> rows;
    for (const auto& d : traj.drift) {
        DriftReportRow row;
        row.name = d.name;
        row.max_deviation = d.max_deviation;
        row.relative_deviation =
            std::abs(d.initial) > 0.0 ? d.max_deviation / std::abs(d.initial)
                                      : d.max_deviation;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace focuskit
