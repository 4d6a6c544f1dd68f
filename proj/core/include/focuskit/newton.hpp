#pragma once

#include <functional>
#include <optional>

#include "focuskit/common.hpp"

namespace focuskit {

struct NewtonOptions {
    double tol = 1e-12;       // target max-abs residual
    double accept_tol = 0.0;  // accept if final residual below this (0 -> use tol)
    int max_iter = 50;
    int max_backtracks = 6;
};

/// Least-squares Newton (Gauss-Newton) for residual maps R^n -> R^m, any
/// shape. The step is the minimum-norm least-squares solution of J dx = -r,
/// so underdetermined projections move approximately orthogonally to the
/// constraint set, and overdetermined consistent systems converge
/// quadratically. Backtracks on the squared residual.
///
/// Returns the final iterate when its max-abs residual is below accept_tol,
/// nullopt otherwise.
std::optional<Vec> gauss_newton(
    const std::function<Vec(const Vec&)>& residual,
    const std::function<Mat(const Vec&)>& jacobian,
    Vec x0,
    const NewtonOptions& opts = {});

}  // namespace focuskit
