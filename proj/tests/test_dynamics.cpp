#include <doctest.h>

#include <cmath>

#include "focuskit/dynamics.hpp"
#include "test_util.hpp"

using namespace focuskit;
using namespace focuskit::testutil;

namespace {

double max_energy_drift(const Trajectory& traj) {
    for (const auto& d : traj.drift)
        if (d.name == "H") return d.max_deviation;
    return -1.0;
}

}  // namespace

TEST_CASE("integration preserves Casimirs and monitors energy") {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec x0 = point6(1.6, 1.0, -1.2, 0.6, 0.0, 0.8);
    REQUIRE(orbit_residual(sys.orbit, x0) < 1e-12);

    const Trajectory traj = integrate(sys, x0, 2.0, 1e-3);
    CHECK(traj.times.size() == 2001);
    CHECK(traj.states.size() == traj.times.size());
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == doctest::Approx(2.0).epsilon(1e-12));

    REQUIRE(traj.drift.size() == 4);  // H, F, two Casimirs
    CHECK(traj.drift[0].name == "H");
    CHECK(traj.drift[1].name == "F");
    CHECK(traj.drift[0].max_deviation < 1e-7);
    CHECK(traj.drift[1].max_deviation < 1e-7);
    CHECK(traj.drift[2].max_deviation < 1e-9);
    CHECK(traj.drift[3].max_deviation < 1e-9);

    for (const auto& x : traj.states)
        CHECK(orbit_residual(sys.orbit, x) < 1e-10);
}

TEST_CASE("canonical system integrates without Casimir projection") {
    const SystemSpec sys = builtin_system("remark-r4");
    const Vec x0 = point4(0.4, -0.3, 1.1, 0.2);
    const Trajectory traj = integrate(sys, x0, 2.0, 1e-3);
    CHECK(traj.drift.size() == 2);  // H and F only
    CHECK(traj.drift[0].max_deviation < 1e-8);
    CHECK(traj.drift[1].max_deviation < 1e-8);
}

TEST_CASE("energy error converges at fourth order") {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec x0 = point6(1.6, 1.0, -1.2, 0.6, 0.0, 0.8);
    const double e1 = max_energy_drift(integrate(sys, x0, 2.0, 4e-3));
    const double e2 = max_energy_drift(integrate(sys, x0, 2.0, 2e-3));
    const double slope = std::log2(e1 / e2);
    CHECK(slope > 3.5);
    CHECK(slope < 4.5);
}

TEST_CASE("invalid inputs are rejected") {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec on = point6(1.6, 1.0, -1.2, 0.6, 0.0, 0.8);
    CHECK_THROWS_AS(integrate(sys, on, 1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(integrate(sys, on, 1.0, -1e-3), ValidationError);
    CHECK_THROWS_AS(integrate(sys, on, -1.0, 1e-3), ValidationError);
    CHECK_THROWS_AS(integrate(sys, point6(0, 0, 0, 2, 0, 0), 1.0, 1e-3),
                    ValidationError);
    CHECK_THROWS_AS(integrate(sys, point4(0, 0, 0, 0), 1.0, 1e-3), ValidationError);
}

TEST_CASE("drift report normalizes against the initial value") {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec x0 = point6(1.6, 1.0, -1.2, 0.6, 0.0, 0.8);
    const Trajectory traj = integrate(sys, x0, 1.0, 1e-3);
    const auto rows = drift_report(traj);
    REQUIRE(rows.size() == traj.drift.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].name == traj.drift[i].name);
        CHECK(rows[i].max_deviation == traj.drift[i].max_deviation);
        const double init = std::abs(traj.drift[i].initial);
        const double expected =
            init > 0.0 ? traj.drift[i].max_deviation / init : traj.drift[i].max_deviation;
        CHECK(rows[i].relative_deviation == doctest::Approx(expected));
    }
}

TEST_CASE("integration is deterministic") {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec x0 = point6(1.6, 1.0, -1.2, 0.6, 0.0, 0.8);
    const Trajectory a = integrate(sys, x0, 1.0, 1e-3);
    const Trajectory b = integrate(sys, x0, 1.0, 1e-3);
    REQUIRE(a.states.size() == b.states.size());
    for (std::size_t i = 0; i < a.states.size(); ++i)
        CHECK((a.states[i] - b.states[i]).norm() == 0.0);
}
