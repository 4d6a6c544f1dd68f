#pragma once

#include <string>
#include <vector>

#include "focuskit/poisson.hpp"

namespace focuskit {

struct InvariantDrift {
    std::string name;
    double initial = 0.0;
    double max_deviation = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec> states;
    std::vector<InvariantDrift> drift;  // H, F, then each Casimir
};

/// Integrate the Euler equations xdot = pi(x) grad H(x) with classical RK4
/// at fixed step, projecting back onto the Casimir level set after every
/// step. Energy is monitored, not enforced. Throws on an off-orbit initial
/// point (residual >= 1e-8) or projection divergence.
Trajectory integrate(const SystemSpec& sys, const Vec& x0, double t_end, double dt);

struct DriftReportRow {
    std::string name;
    double max_deviation = 0.0;
    double relative_deviation = 0.0;
};

/// Deviations of every monitored invariant against its initial value.
std::vector<DriftReportRow> drift_report(const Trajectory& traj);

}  // namespace focuskit
