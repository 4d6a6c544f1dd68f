#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "focuskit/singularity.hpp"
#include "test_util.hpp"

using namespace focuskit;
using namespace focuskit::testutil;

namespace {

std::vector<std::complex<double>> eigenvalues(const Mat& a) {
    Eigen::EigenSolver<Mat> es(a);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < a.rows(); ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

std::vector<std::complex<double>> quadruple(double x, double y) {
    return {{x, y}, {x, -y}, {-x, y}, {-x, -y}};
}

}  // namespace

TEST_CASE("label names") {
    CHECK(to_string(SingularLabel::focus_focus) == "focus-focus");
    CHECK(to_string(SingularLabel::center_center) == "center-center");
    CHECK(to_string(SingularLabel::center_saddle) == "center-saddle");
    CHECK(to_string(SingularLabel::saddle_saddle) == "saddle-saddle");
    CHECK(to_string(SingularLabel::degenerate) == "degenerate");
}

TEST_CASE("orbit tangent basis") {
    const SystemSpec canonical = builtin_system("canonical4");
    const Mat b4 = orbit_tangent_basis(canonical.orbit, point4(0.3, -1, 2, 0.5));
    CHECK(b4.rows() == 4);
    CHECK(b4.cols() == 4);

    const SystemSpec e3 = builtin_system("e3-form41");
    auto gen = substream(53, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec x = sample_orbit_point(e3.orbit, gen);
        const Mat b = orbit_tangent_basis(e3.orbit, x);
        CHECK(b.rows() == 6);
        CHECK(b.cols() == 4);
        CHECK((b.transpose() * b - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
        for (const auto& c : e3.orbit.structure.casimirs())
            CHECK((c.grad(x).transpose() * b).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("moment rank on and off the equilibria") {
    const SystemSpec sys = builtin_system("e3-form41");
    CHECK(moment_rank(sys, point6(0, 0, 0, 0, 0, 1)) == 0);
    CHECK(moment_rank(sys, point6(0, 0, 0, 0, 0, -1)) == 0);

    auto gen = substream(59, 0);
    int rank_two = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const Vec x = sample_orbit_point(sys.orbit, gen);
        if (moment_rank(sys, x) == 2) ++rank_two;
    }
    CHECK(rank_two >= 8);  // generic points are regular

    CHECK_THROWS_AS(moment_rank(sys, point6(0, 0, 0, 0, 0, 2)), ValidationError);
}

TEST_CASE("canonical focus model linearization spectrum is {+-a +- ib}") {
    const SystemSpec sys = builtin_system("canonical4");
    const Vec origin = Vec::Zero(4);
    const std::vector<std::pair<double, double>> combos = {
        {1.0, 0.5}, {0.3, 1.2}, {-0.7, 0.9}};
    for (const auto& [a, b] : combos) {
        const Mat lin = linearize(sys, origin, a, b);
        CHECK(spectrum_matches(eigenvalues(lin), quadruple(a, b), 1e-10));
    }
}

TEST_CASE("e(3) model linearization spectrum is {+-sqrt(2) a +- ib}") {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec p_plus = point6(0, 0, 0, 0, 0, 1);
    const double r2 = std::sqrt(2.0);
    CHECK(spectrum_matches(eigenvalues(linearize(sys, p_plus, 1.0, 1.0)),
                           quadruple(r2, 1.0), 1e-9));
    CHECK(spectrum_matches(eigenvalues(linearize(sys, p_plus, 0.5, -2.0)),
                           quadruple(0.5 * r2, 2.0), 1e-9));
}

TEST_CASE("linearize rejects regular points") {
    const SystemSpec sys = builtin_system("e3-form41");
    auto gen = substream(61, 0);
    const Vec x = sample_orbit_point(sys.orbit, gen);
    if (moment_rank(sys, x) != 0)
        CHECK_THROWS_AS(linearize(sys, x, 1.0, 0.0), ValidationError);
}

TEST_CASE("classify finds the focus window") {
    const SystemSpec canonical = builtin_system("canonical4");
    const SingularPoint origin = classify(canonical, Vec::Zero(4));
    CHECK(origin.label == SingularLabel::focus_focus);
    CHECK(origin.rank == 0);
    CHECK(origin.spectrum.size() == 4);
    CHECK(spectrum_matches(origin.spectrum,
                           quadruple(origin.combination_a, origin.combination_b),
                           1e-9));

    const SystemSpec e3 = builtin_system("e3-form41");
    CHECK(classify(e3, point6(0, 0, 0, 0, 0, 1)).label == SingularLabel::focus_focus);
    CHECK(classify(e3, point6(0, 0, 0, 0, 0, -1)).label == SingularLabel::focus_focus);
}

TEST_CASE("large twist leaves the focus window") {
    // orbit (1, m): equilibria sit at m3 = +-m, q3 = +-1; the eigenvalue
    // quadruple collapses onto the axes once m >= 2 sqrt(2)
    Vec cas(2);
    cas << 1.0, 3.0;
    const SystemSpec sys = builtin_system("e3-form41", cas);
    const SingularPoint p = classify(sys, point6(0, 0, 3.0, 0, 0, 1));
    CHECK(p.label != SingularLabel::focus_focus);
}

TEST_CASE("rank-0 search on the standard orbit") {
    const SystemSpec sys = builtin_system("e3-form41");
    const auto points = find_rank0_points(sys, 120, 7);
    REQUIRE(points.size() == 2);
    // sorted lexicographically: q3 = -1 first
    CHECK((points[0].location - point6(0, 0, 0, 0, 0, -1)).norm() < 1e-9);
    CHECK((points[1].location - point6(0, 0, 0, 0, 0, 1)).norm() < 1e-9);
    for (const auto& p : points) {
        CHECK(p.rank == 0);
        CHECK(p.label == SingularLabel::focus_focus);
    }
}

TEST_CASE("rank-0 search on a twisted orbit splits the moment values") {
    Vec cas(2);
    cas << 1.0, 0.5;
    const SystemSpec sys = builtin_system("e3-form41", cas);
    const auto points = find_rank0_points(sys, 120, 11);
    REQUIRE(points.size() == 2);
    CHECK((points[0].location - point6(0, 0, -0.5, 0, 0, -1)).norm() < 1e-9);
    CHECK((points[1].location - point6(0, 0, 0.5, 0, 0, 1)).norm() < 1e-9);

    const double h0 = sys.hamiltonian(points[0].location);
    const double f0 = sys.integral(points[0].location);
    const double h1 = sys.hamiltonian(points[1].location);
    const double f1 = sys.integral(points[1].location);
    CHECK(h0 == doctest::Approx(1.125).epsilon(1e-9));
    CHECK(h1 == doctest::Approx(1.125).epsilon(1e-9));
    CHECK(std::hypot(h1 - h0, f1 - f0) > 1e-3);
    CHECK(f0 == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(f1 == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("rank-0 search is reproducible for a fixed seed") {
    const SystemSpec sys = builtin_system("e3-form41");
    const auto a = find_rank0_points(sys, 60, 3);
    const auto b = find_rank0_points(sys, 60, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK((a[i].location - b[i].location).norm() == 0.0);
}
