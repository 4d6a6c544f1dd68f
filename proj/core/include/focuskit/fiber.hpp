#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "focuskit/singularity.hpp"

namespace focuskit {

struct MomentValue {
    double h = 0.0;
    double f = 0.0;
};

enum class FiberStatus {
    ok,            // at least one converged point
    empty,         // every restart failed over >= 500 attempts: no solutions
    inconclusive,  // budget exhausted before the empty-fiber bar was met
};

/// A point cloud on one fiber of the moment map with connectivity and
/// rank-0 annotations.
struct FiberSample {
    MomentValue moment;
    FiberStatus status = FiberStatus::ok;
    std::vector<Vec> points;
    std::vector<std::pair<int, int>> adjacency;  // edges at distance < eps_link
    double eps_link = 0.0;
    int n_components = 0;
    std::vector<SingularPoint> rank0_on_fiber;
    int complexity = 0;
};

/// Sample the fiber {Casimirs = orbit values, H = h, F = f} by least-squares
/// Newton from random ambient restarts. eps_link <= 0 selects the adaptive
/// default, 3x the 90th-percentile nearest-neighbour distance. complexity
/// counts the
/// deduplicated rank-0 points whose moment values match to 1e-8.
FiberSample sample_fiber(const SystemSpec& sys, MomentValue moment,
                         int n_points, std::uint64_t seed,
                         double eps_link = 0.0);

/// Explicit point on the complexity-2 fiber of the e(3)* model system:
/// q-part = q * direction on the sphere |q| given, m = sign * sqrt(2) *
/// (q2, -q1, 0). Satisfies all four fiber equations exactly.
Vec oracle_fiber_e3(double q, int sign, const Eigen::Vector3d& direction);

/// Explicit point on the complexity-2 fiber of the lambda-family system
/// (lambda < 1/2): q on the ellipsoid (q1^2+q2^2)/(1-2 lambda) + q3^2 = c^2
/// parameterized by spherical angles, m = sign * sqrt(2/(1-2 lambda)) *
/// (q2, -q1, 0). lambda = 0 reduces to oracle_fiber_e3.
Vec oracle_fiber_lambda(double c, double lambda, int sign,
                        double theta, double phi);

/// Distance from x to the e(3) oracle surface for orbit radius q (minimum
/// over both signs and the sphere parameters).
double oracle_distance_e3(const Vec& x, double q);

struct MomentGrid {
    double h_min = 0.0, h_max = 1.0;
    double f_min = 0.0, f_max = 1.0;
    int resolution = 8;  // cells per axis
};

struct MomentImageCell {
    double h = 0.0, f = 0.0;  // cell center
    bool fiber_exists = false;
    int complexity = 0;
};

/// Bifurcation-diagram table: probes each grid cell with a small restart
/// budget and counts the system's rank-0 points falling in the cell.
std::vector<MomentImageCell> moment_image(const SystemSpec& sys,
                                          const MomentGrid& grid,
                                          std::uint64_t seed);

}  // namespace focuskit
