#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "focuskit/poisson.hpp"

namespace focuskit {

enum class SingularLabel {
    focus_focus,
    center_center,
    center_saddle,
    saddle_saddle,
    degenerate,
};

std::string to_string(SingularLabel label);

/// A located rank-0 point with its restricted linearization spectrum.
struct SingularPoint {
    Vec location;
    int rank = 0;
    std::vector<std::complex<double>> spectrum;  // 4 values on a 4-dim orbit
    SingularLabel label = SingularLabel::degenerate;
    double combination_a = 0.0;  // (a, b) used for the reported spectrum
    double combination_b = 0.0;
};

/// Orthonormal basis of the orbit tangent space at x (kernel of the Casimir
/// differentials, via SVD); identity when there are no Casimirs. Throws
/// NumericalError when the Casimir gradients are close to dependent.
Mat orbit_tangent_basis(const OrbitSpec& orbit, const Vec& x);

/// Rank of the moment map dF = (dH, dF) restricted to the orbit tangent at x.
/// Singular values below 1e-8 * (1 + sigma_max) count as zero.
/// Throws when x is off the orbit (Casimir residual >= 1e-8).
int moment_rank(const SystemSpec& sys, const Vec& x);

/// Linearized flow of a*H + b*F restricted to the orbit tangent: an
/// orthonormal-basis compression B^T D[sgrad(aH+bF)] B. Its eigenvalues are
/// the roots of the classification polynomial up to the operator convention.
/// Requires moment_rank(sys, x) == 0.
Mat linearize(const SystemSpec& sys, const Vec& x, double a, double b);

/// Classify a rank-0 point by sweeping (a, b) over the unit circle
/// (n_combinations angles plus seeded jitter): focus_focus when any
/// combination yields four distinct eigenvalues +-x +- iy with x, y nonzero
/// at tolerance 1e-6 * spectral radius.
SingularPoint classify(const SystemSpec& sys, const Vec& x,
                       int n_combinations = 32, std::uint64_t seed = 0);

/// Random-restart Newton search for rank-0 points on the orbit. Restarts are
/// ambient draws in [-3,3]^n projected to the orbit; converged limit points
/// are deduplicated within radius 1e-6 (smallest residual wins), verified to
/// Casimir residual < 1e-10 and projected-gradient norm < 1e-10, then
/// classified. Results are sorted lexicographically by location.
std::vector<SingularPoint> find_rank0_points(const SystemSpec& sys,
                                             int n_restarts, std::uint64_t seed);

}  // namespace focuskit
