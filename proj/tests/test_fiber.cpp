#include <doctest.h>

#include <cmath>
#include <numbers>

#include "focuskit/fiber.hpp"
#include "test_util.hpp"

using namespace focuskit;
using namespace focuskit::testutil;

namespace {

Eigen::Vector3d random_direction(std::mt19937_64& gen) {
    const double z = uniform(gen, -1.0, 1.0);
    const double phi = uniform(gen, 0.0, 2.0 * std::numbers::pi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace

TEST_CASE("e(3) oracle points satisfy the fiber equations exactly") {
    const SystemSpec sys = builtin_system("e3-form41");
    auto gen = substream(67, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const int sign = (gen() & 1) ? 1 : -1;
        const Vec x = oracle_fiber_e3(1.0, sign, random_direction(gen));
        CHECK(orbit_residual(sys.orbit, x) < 1e-14);
        CHECK(std::abs(sys.hamiltonian(x) - 1.0) < 1e-14);
        CHECK(std::abs(sys.integral(x)) < 1e-14);
    }
    CHECK_THROWS_AS(oracle_fiber_e3(0.0, 1, {0, 0, 1}), ValidationError);
    CHECK_THROWS_AS(oracle_fiber_e3(1.0, 1, {0, 0, 2}), ValidationError);
}

TEST_CASE("lambda oracle points satisfy the fiber equations exactly") {
    const double lambda = 0.2;
    const double c = 1.0;
    Vec cas(2);
    cas << c * c, 0.0;
    const SystemSpec sys = builtin_system("lambda-form41", cas, lambda);
    auto gen = substream(71, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const int sign = (gen() & 1) ? 1 : -1;
        const double theta = uniform(gen, 0.0, std::numbers::pi);
        const double phi = uniform(gen, 0.0, 2.0 * std::numbers::pi);
        const Vec x = oracle_fiber_lambda(c, lambda, sign, theta, phi);
        CHECK(orbit_residual(sys.orbit, x) < 1e-13);
        CHECK(std::abs(sys.hamiltonian(x) - c * c) < 1e-13);
        CHECK(std::abs(sys.integral(x)) < 1e-13);
    }
    CHECK_THROWS_AS(oracle_fiber_lambda(1.0, 0.5, 1, 0.1, 0.1), ValidationError);
}

TEST_CASE("lambda oracle reduces to the e(3) oracle at lambda = 0") {
    auto gen = substream(73, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const double theta = uniform(gen, 0.0, std::numbers::pi);
        const double phi = uniform(gen, 0.0, 2.0 * std::numbers::pi);
        const Vec a = oracle_fiber_lambda(1.0, 0.0, 1, theta, phi);
        CHECK(oracle_distance_e3(a, 1.0) < 1e-7);
    }
}

TEST_CASE("oracle distance resolves small perturbations") {
    auto gen = substream(79, 0);
    const Vec x = oracle_fiber_e3(1.0, 1, random_direction(gen));
    CHECK(oracle_distance_e3(x, 1.0) < 1e-8);
    Vec y = x;
    y[2] += 1e-3;  // leave the surface in the m3 direction
    const double d = oracle_distance_e3(y, 1.0);
    CHECK(d > 1e-4);
    CHECK(d < 2e-3);
}

TEST_CASE("sampled singular fiber: one component, complexity 2") {
    const SystemSpec sys = builtin_system("e3-form41");
    const FiberSample fs = sample_fiber(sys, {1.0, 0.0}, 600, 17);
    CHECK(fs.status == FiberStatus::ok);
    CHECK(static_cast<int>(fs.points.size()) == 600);
    CHECK(fs.n_components == 1);
    CHECK(fs.complexity == 2);
    REQUIRE(fs.rank0_on_fiber.size() == 2);
    CHECK(fs.eps_link > 0.0);
    for (const auto& x : fs.points)
        CHECK(oracle_distance_e3(x, 1.0) < 1e-5);
}

TEST_CASE("regular fiber carries no rank-0 points") {
    const SystemSpec sys = builtin_system("e3-form41");
    const FiberSample fs = sample_fiber(sys, {1.5, 0.3}, 300, 19);
    CHECK(fs.status == FiberStatus::ok);
    CHECK(fs.complexity == 0);
    CHECK(fs.rank0_on_fiber.empty());
}

TEST_CASE("unreachable moment value reports an empty fiber") {
    // F = m3 = 5 forces H >= 12.5, far above h = 0.1
    const SystemSpec sys = builtin_system("e3-form41");
    const FiberSample fs = sample_fiber(sys, {0.1, 5.0}, 50, 23);
    CHECK(fs.status == FiberStatus::empty);
    CHECK(fs.points.empty());
    CHECK(fs.n_components == 0);
}

TEST_CASE("fiber sampling is reproducible for a fixed seed") {
    const SystemSpec sys = builtin_system("e3-form41");
    const FiberSample a = sample_fiber(sys, {1.0, 0.0}, 150, 29);
    const FiberSample b = sample_fiber(sys, {1.0, 0.0}, 150, 29);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i)
        CHECK((a.points[i] - b.points[i]).norm() == 0.0);
    CHECK(a.eps_link == b.eps_link);
    CHECK(a.adjacency == b.adjacency);
}

TEST_CASE("moment image marks the singular cell") {
    const SystemSpec sys = builtin_system("e3-form41");
    MomentGrid grid;
    grid.h_min = 0.5;
    grid.h_max = 1.5;
    grid.f_min = -0.5;
    grid.f_max = 0.5;
    grid.resolution = 3;
    const auto cells = moment_image(sys, grid, 31);
    REQUIRE(static_cast<int>(cells.size()) == 9);
    bool found = false;
    for (const auto& cell : cells) {
        if (std::abs(cell.h - 1.0) < 1e-12 && std::abs(cell.f) < 1e-12) {
            found = true;
            CHECK(cell.fiber_exists);
            CHECK(cell.complexity == 2);
        }
    }
    CHECK(found);
}
