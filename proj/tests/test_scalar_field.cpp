#include <doctest.h>

#include "focuskit/scalar_field.hpp"
#include "test_util.hpp"

using namespace focuskit;
using namespace focuskit::testutil;

namespace {

// H = (m1^2 + m2^2 + m3^2)/2 + q3^2 on R^6
ScalarField model_hamiltonian() {
    std::vector<Monomial> terms;
    for (int i = 0; i < 3; ++i) terms.push_back({0.5, {0, 0, 0, 0, 0, 0}});
    terms[0].exponents[0] = 2;
    terms[1].exponents[1] = 2;
    terms[2].exponents[2] = 2;
    terms.push_back({1.0, {0, 0, 0, 0, 0, 2}});
    return make_polynomial_field(6, terms);
}

// f2 = p1 q2 - p2 q1 on R^4 with coordinates (p1, p2, q1, q2)
ScalarField angular_field() {
    return make_polynomial_field(4, {{1.0, {1, 0, 0, 1}}, {-1.0, {0, 1, 1, 0}}});
}

}  // namespace

TEST_CASE("polynomial field evaluates the model Hamiltonian") {
    const ScalarField h = model_hamiltonian();
    CHECK(h(point6(0, 0, 0, 0, 0, 1)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h(point6(1, 1, 1, 0, 0, 0)) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("empty polynomial is the zero field") {
    const ScalarField z = make_polynomial_field(4, {});
    CHECK(z(point4(1, -2, 3, 0.5)) == 0.0);
    CHECK(z.grad(point4(1, 2, 3, 4)).norm() == 0.0);
}

TEST_CASE("angular momentum field value") {
    CHECK(angular_field()(point4(1, 2, 3, 4)) == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("polynomial construction rejects bad input") {
    CHECK_THROWS_AS(make_polynomial_field(0, {}), ValidationError);
    CHECK_THROWS_AS(make_polynomial_field(-2, {}), ValidationError);
    CHECK_THROWS_AS(make_polynomial_field(3, {{1.0, {1, 0}}}), ValidationError);
    CHECK_THROWS_AS(make_polynomial_field(2, {{1.0, {1, -1}}}), ValidationError);
}

TEST_CASE("finite_difference_check on analytic fields") {
    const ScalarField h = model_hamiltonian();
    auto gen = substream(7, 0);
    const Vec x = uniform_vec(gen, 6, -2.0, 2.0);
    const auto report = finite_difference_check(h, x, 1e-5);
    CHECK(report.max_grad_error < 1e-8);

    const ScalarField c = constant_field(3, 4.2);
    const auto creport = finite_difference_check(c, Vec::Zero(3), 1e-4);
    CHECK(creport.max_grad_error < 1e-12);
    CHECK(creport.max_hess_error < 1e-12);

    const auto freport = finite_difference_check(angular_field(), Vec::Zero(4), 1e-4);
    CHECK(freport.max_hess_error < 1e-9);

    CHECK_THROWS_AS(finite_difference_check(h, x, 0.0), ValidationError);
}

TEST_CASE("analytic gradients match central differences on random points") {
    auto gen = substream(11, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + static_cast<int>(gen() % 5);
        const ScalarField f = make_polynomial_field(dim, random_terms(gen, dim, 4, 3));
        for (int p = 0; p < 5; ++p) {
            const Vec x = uniform_vec(gen, dim, -2.0, 2.0);
            const auto report = finite_difference_check(f, x, 1e-5);
            CHECK(report.max_grad_error < 1e-6);
        }
    }
}

TEST_CASE("Hessian symmetry is exact in analytic mode") {
    auto gen = substream(13, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const ScalarField f = make_polynomial_field(5, random_terms(gen, 5, 5, 4));
        const Vec x = uniform_vec(gen, 5, -2.0, 2.0);
        const Mat h = f.hess(x);
        CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("finite-difference mode reproduces analytic derivatives") {
    const ScalarField analytic = model_hamiltonian();
    const ScalarField fd(6, [&analytic](const Vec& x) { return analytic(x); });
    CHECK(fd.mode() == DerivativeMode::finite_difference);
    auto gen = substream(17, 0);
    const Vec x = uniform_vec(gen, 6, -2.0, 2.0);
    CHECK((fd.grad(x) - analytic.grad(x)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((fd.hess(x) - analytic.hess(x)).cwiseAbs().maxCoeff() < 1e-5);
    const Mat h = fd.hess(x);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("linear_combination and multiply_terms") {
    const ScalarField f = angular_field();
    const ScalarField g = constant_field(4, 2.0);
    const ScalarField combo = linear_combination(3.0, f, 1.0, g);
    const Vec x = point4(1, 2, 3, 4);
    CHECK(combo(x) == doctest::Approx(3.0 * -2.0 + 2.0));

    auto gen = substream(19, 0);
    const auto ta = random_terms(gen, 3);
    const auto tb = random_terms(gen, 3);
    const ScalarField fa = make_polynomial_field(3, ta);
    const ScalarField fb = make_polynomial_field(3, tb);
    const ScalarField fab = make_polynomial_field(3, multiply_terms(ta, tb));
    const Vec y = uniform_vec(gen, 3, -2.0, 2.0);
    CHECK(fab(y) == doctest::Approx(fa(y) * fb(y)).epsilon(1e-12));
}
