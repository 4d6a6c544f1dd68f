#include "focuskit/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "focuskit/newton.hpp"
#include "focuskit/rng.hpp"

namespace focuskit {

namespace {

constexpr double kOrbitTol = 1e-8;
constexpr double kRankRelTol = 1e-8;
constexpr double kPointTol = 1e-10;
constexpr double kDedupRadius = 1e-6;
constexpr double kSpectralRelTol = 1e-6;

using Cplx = std::complex<double>;

std::vector<Cplx> eigenvalues(const Mat& m) {
    Eigen::EigenSolver<Mat> solver(m, /*computeEigenvectors=*/false);
    std::vector<Cplx> eigs(m.rows());
    for (int i = 0; i < m.rows(); ++i) eigs[i] = solver.eigenvalues()[i];
    // deterministic order: by real part, then imaginary
    std::sort(eigs.begin(), eigs.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return eigs;
}

// Greedy matching of the computed spectrum against an expected multiset.
bool matches_multiset(const std::vector<Cplx>& eigs, std::vector<Cplx> expected,
                      double tol) {
    for (const Cplx& e : eigs) {
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

SingularLabel label_spectrum(const std::vector<Cplx>& eigs) {
    double radius = 0.0;
    for (const Cplx& e : eigs) radius = std::max(radius, std::abs(e));
    if (radius < 1e-12) return SingularLabel::degenerate;
    const double tol = kSpectralRelTol * radius;

    // focus-focus: quadruple {x+iy, x-iy, -x+iy, -x-iy}, x, y nonzero,
    // all four distinct (automatic once x, y > tol)
    for (const Cplx& e : eigs) {
        if (std::abs(e.real()) <= tol || std::abs(e.imag()) <= tol) continue;
        if (matches_multiset(eigs, {e, std::conj(e), -e, -std::conj(e)}, tol))
            return SingularLabel::focus_focus;
    }

    std::vector<Cplx> reals, imags;
    for (const Cplx& e : eigs) {
        const bool re = std::abs(e.real()) > tol;
        const bool im = std::abs(e.imag()) > tol;
        if (re && !im) reals.push_back(e);
        else if (im && !re) imags.push_back(e);
        else return SingularLabel::degenerate;  // zero or unpaired complex
    }
    auto paired = [tol](const std::vector<Cplx>& v) {
        std::vector<Cplx> expected;
        for (const Cplx& e : v) expected.push_back(-e);
        return matches_multiset(v, expected, tol);
    };
    if (!paired(reals) || !paired(imags)) return SingularLabel::degenerate;
    if (reals.size() == 4) return SingularLabel::saddle_saddle;
    if (imags.size() == 4) return SingularLabel::center_center;
    if (reals.size() == 2 && imags.size() == 2) return SingularLabel::center_saddle;
    return SingularLabel::degenerate;
}

}  // namespace

std::string to_string(SingularLabel label) {
    switch (label) {
        case SingularLabel::focus_focus: return "focus-focus";
        case SingularLabel::center_center: return "center-center";
        case SingularLabel::center_saddle: return "center-saddle";
        case SingularLabel::saddle_saddle: return "saddle-saddle";
        case SingularLabel::degenerate: return "degenerate";
    }
    return "degenerate";
}

Mat orbit_tangent_basis(const OrbitSpec& orbit, const Vec& x) {
    const int n = orbit.structure.dim();
    const auto& cs = orbit.structure.casimirs();
    if (cs.empty()) return Mat::Identity(n, n);
    const int k = static_cast<int>(cs.size());
    Mat c(k, n);
    for (int i = 0; i < k; ++i) c.row(i) = cs[i].grad(x).transpose();
    Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeFullV);
    if (svd.singularValues()[k - 1] < 1e-8)
        throw NumericalError("orbit_tangent_basis: Casimir gradients nearly dependent");
    return svd.matrixV().rightCols(n - k);
}

int moment_rank(const SystemSpec& sys, const Vec& x) {
    if (orbit_residual(sys.orbit, x) >= kOrbitTol)
        throw ValidationError("moment_rank: point is off the orbit");
    const Mat b = orbit_tangent_basis(sys.orbit, x);
    Mat m(2, b.cols());
    m.row(0) = (b.transpose() * sys.hamiltonian.grad(x)).transpose();
    m.row(1) = (b.transpose() * sys.integral.grad(x)).transpose();
    Eigen::JacobiSVD<Mat> svd(m);
    const double smax = svd.singularValues()[0];
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] >= kRankRelTol * (1.0 + smax)) ++rank;
    return rank;
}

Mat linearize(const SystemSpec& sys, const Vec& x, double a, double b) {
    if (moment_rank(sys, x) != 0)
        throw ValidationError("linearize: point is not rank-0");
    const ScalarField combo = linear_combination(a, sys.hamiltonian, b, sys.integral);
    const Mat jac = sgrad_jacobian(sys.orbit.structure, combo, x);
    const Mat basis = orbit_tangent_basis(sys.orbit, x);
    return basis.transpose() * jac * basis;
}

SingularPoint classify(const SystemSpec& sys, const Vec& x,
                       int n_combinations, std::uint64_t seed) {
    if (n_combinations < 1)
        throw ValidationError("classify: n_combinations must be >= 1");
    if (moment_rank(sys, x) != 0)
        throw ValidationError("classify: point is not rank-0");

    SingularPoint result;
    result.location = x;
    result.rank = 0;

    auto gen = substream(seed, 0x5f0cu);
    bool have_fallback = false;
    for (int t = 0; t < n_combinations; ++t) {
        const double jitter =
            0.1 * uniform01(gen) * 2.0 * std::numbers::pi / n_combinations;
        const double theta = 2.0 * std::numbers::pi * t / n_combinations + jitter;
        const double a = std::cos(theta);
        const double b = std::sin(theta);
        const auto eigs = eigenvalues(linearize(sys, x, a, b));
        const SingularLabel label = label_spectrum(eigs);
        if (label == SingularLabel::focus_focus) {
            result.spectrum = eigs;
            result.label = label;
            result.combination_a = a;
            result.combination_b = b;
            return result;
        }
        if (!have_fallback || (result.label == SingularLabel::degenerate &&
                               label != SingularLabel::degenerate)) {
            result.spectrum = eigs;
            result.label = label;
            result.combination_a = a;
            result.combination_b = b;
            have_fallback = true;
        }
    }
    return result;
}

std::vector<SingularPoint> find_rank0_points(const SystemSpec& sys,
                                             int n_restarts, std::uint64_t seed) {
    if (n_restarts < 1)
        throw ValidationError("find_rank0_points: n_restarts must be >= 1");
    const auto& ps = sys.orbit.structure;
    const int n = ps.dim();
    const auto& cs = ps.casimirs();
    const int k = static_cast<int>(cs.size());

    auto residual = [&](const Vec& x) {
        Vec r(2 * n + k);
        r.head(n) = sgrad(ps, sys.hamiltonian, x);
        r.segment(n, n) = sgrad(ps, sys.integral, x);
        for (int i = 0; i < k; ++i)
            r[2 * n + i] = cs[i](x) - sys.orbit.casimir_values[i];
        return r;
    };
    auto jacobian = [&](const Vec& x) {
        Mat j(2 * n + k, n);
        j.topRows(n) = sgrad_jacobian(ps, sys.hamiltonian, x);
        j.middleRows(n, n) = sgrad_jacobian(ps, sys.integral, x);
        for (int i = 0; i < k; ++i) j.row(2 * n + i) = cs[i].grad(x).transpose();
        return j;
    };

    NewtonOptions opts;
    opts.tol = 1e-13;
    opts.accept_tol = kPointTol;
    opts.max_iter = 80;

    std::vector<Vec> points;
    std::vector<double> residuals;
    for (int restart = 0; restart < n_restarts; ++restart) {
        auto gen = substream(seed, static_cast<std::uint64_t>(restart));
        const Vec x0 = uniform_vec(gen, n, -3.0, 3.0);
        const auto limit = gauss_newton(residual, jacobian, x0, opts);
        if (!limit) continue;
        const Vec& x = *limit;

        if (orbit_residual(sys.orbit, x) >= kPointTol) continue;
        const Mat basis = orbit_tangent_basis(sys.orbit, x);
        if ((basis.transpose() * sys.hamiltonian.grad(x)).norm() >= kPointTol) continue;
        if ((basis.transpose() * sys.integral.grad(x)).norm() >= kPointTol) continue;

        const double res = residual(x).cwiseAbs().maxCoeff();
        bool merged = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if ((points[i] - x).norm() < kDedupRadius) {
                if (res < residuals[i]) {
                    points[i] = x;
                    residuals[i] = res;
                }
                merged = true;
                break;
            }
        }
        if (!merged) {
            points.push_back(x);
            residuals.push_back(res);
        }
    }

    // tolerant lexicographic order: converged coordinates carry O(1e-12)
    // noise, so exact comparison would let a coordinate that is zero up to
    // roundoff decide the order
    std::sort(points.begin(), points.end(), [](const Vec& a, const Vec& b) {
        for (int i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) > 1e-8) return a[i] < b[i];
        return false;
    });

    std::vector<SingularPoint> out;
    for (const Vec& x : points) {
        if (moment_rank(sys, x) != 0) continue;
        out.push_back(classify(sys, x, 32, mix64(seed)));
    }
    return out;
}

}  // namespace focuskit
