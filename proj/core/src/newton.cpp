#include "focuskit/newton.hpp"

#include <cmath>

namespace focuskit {

std::optional<Vec> gauss_newton(
    const std::function<Vec(const Vec&)>& residual,
    const std::function<Mat(const Vec&)>& jacobian,
    Vec x,
    const NewtonOptions& opts) {
    const double accept = opts.accept_tol > 0.0 ? opts.accept_tol : opts.tol;

    Vec r = residual(x);
    if (!r.allFinite()) return std::nullopt;

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        const double rmax = r.cwiseAbs().maxCoeff();
        if (rmax < opts.tol) return x;

        const Mat j = jacobian(x);
        if (!j.allFinite()) break;
        const Vec dx = j.completeOrthogonalDecomposition().solve(-r);
        if (!dx.allFinite()) break;

        const double r2 = r.squaredNorm();
        double alpha = 1.0;
        bool accepted = false;
        for (int bt = 0; bt <= opts.max_backtracks; ++bt) {
            Vec xt = x + alpha * dx;
            Vec rt = residual(xt);
            // accept any decrease; near rank-deficient Jacobians the
            // Armijo slope estimate is unreliable
            if (rt.allFinite() && rt.squaredNorm() < r2) {
                x = std::move(xt);
                r = std::move(rt);
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;
    }

    if (r.cwiseAbs().maxCoeff() < accept) return x;
    return std::nullopt;
}

}  // namespace focuskit
