#include "focuskit/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "focuskit/newton.hpp"
#include "focuskit/rng.hpp"

namespace focuskit {

namespace {

constexpr double kFiberTol = 1e-10;
constexpr int kEmptyFiberRestarts = 500;  // 100% failures over this many -> empty
constexpr int kRank0Restarts = 200;

struct FiberConstraints {
    const SystemSpec& sys;
    MomentValue moment;

    Vec residual(const Vec& x) const {
        const auto& cs = sys.orbit.structure.casimirs();
        const int k = static_cast<int>(cs.size());
        Vec r(k + 2);
        for (int i = 0; i < k; ++i) r[i] = cs[i](x) - sys.orbit.casimir_values[i];
        r[k] = sys.hamiltonian(x) - moment.h;
        r[k + 1] = sys.integral(x) - moment.f;
        return r;
    }
    Mat jacobian(const Vec& x) const {
        const auto& cs = sys.orbit.structure.casimirs();
        const int k = static_cast<int>(cs.size());
        Mat j(k + 2, x.size());
        for (int i = 0; i < k; ++i) j.row(i) = cs[i].grad(x).transpose();
        j.row(k) = sys.hamiltonian.grad(x).transpose();
        j.row(k + 1) = sys.integral.grad(x).transpose();
        return j;
    }
};

std::optional<Vec> fiber_point_from_restart(const FiberConstraints& fc,
                                            std::uint64_t seed,
                                            std::uint64_t index) {
    auto gen = substream(seed, index);
    const Vec x0 = uniform_vec(gen, fc.sys.orbit.structure.dim(), -3.0, 3.0);
    NewtonOptions opts;
    opts.tol = 1e-12;
    opts.accept_tol = kFiberTol;
    opts.max_iter = 80;
    return gauss_newton([&fc](const Vec& x) { return fc.residual(x); },
                        [&fc](const Vec& x) { return fc.jacobian(x); }, x0, opts);
}

double percentile90(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t k = (9 * v.size()) / 10;
    const std::size_t pos = std::min(k, v.size() - 1);
    std::nth_element(v.begin(), v.begin() + pos, v.end());
    return v[pos];
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<SingularPoint> rank0_matching_moment(const SystemSpec& sys,
                                                 MomentValue moment,
                                                 std::uint64_t seed) {
    std::vector<SingularPoint> out;
    for (auto& pt : find_rank0_points(sys, kRank0Restarts, mix64(seed ^ 0x4a3fULL))) {
        if (std::abs(sys.hamiltonian(pt.location) - moment.h) < 1e-8 &&
            std::abs(sys.integral(pt.location) - moment.f) < 1e-8)
            out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace

FiberSample sample_fiber(const SystemSpec& sys, MomentValue moment,
                         int n_points, std::uint64_t seed, double eps_link) {
    if (n_points < 1)
        throw ValidationError("sample_fiber: n_points must be >= 1");

    FiberSample fs;
    fs.moment = moment;

    const FiberConstraints fc{sys, moment};
    const int max_attempts = std::max(4 * n_points, kEmptyFiberRestarts);
    int attempts = 0;
    for (; attempts < max_attempts &&
           static_cast<int>(fs.points.size()) < n_points; ++attempts) {
        if (auto x = fiber_point_from_restart(fc, seed, attempts))
            fs.points.push_back(*x);
    }

    if (fs.points.empty()) {
        fs.status = attempts >= kEmptyFiberRestarts ? FiberStatus::empty
                                                    : FiberStatus::inconclusive;
        return fs;
    }
    fs.status = FiberStatus::ok;

    const int n = static_cast<int>(fs.points.size());
    if (eps_link > 0.0) {
        fs.eps_link = eps_link;
    } else if (n >= 2) {
        // The fiber is 2-dimensional, so link at a density-adaptive radius.
        // The upper-quantile nearest-neighbour distance absorbs the sparse
        // tail of uniform sampling (the embedding stretches the m-directions,
        // so a median-based radius leaves isolated points).
        std::vector<double> nn(n, std::numeric_limits<double>::infinity());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double d = (fs.points[i] - fs.points[j]).norm();
                nn[i] = std::min(nn[i], d);
                nn[j] = std::min(nn[j], d);
            }
        fs.eps_link = 3.0 * percentile90(nn);
    }

    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((fs.points[i] - fs.points[j]).norm() < fs.eps_link) {
                fs.adjacency.emplace_back(i, j);
                uf.unite(i, j);
            }
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) roots.push_back(uf.find(i));
    std::sort(roots.begin(), roots.end());
    fs.n_components = static_cast<int>(
        std::unique(roots.begin(), roots.end()) - roots.begin());

    fs.rank0_on_fiber = rank0_matching_moment(sys, moment, seed);
    fs.complexity = static_cast<int>(fs.rank0_on_fiber.size());
    return fs;
}

Vec oracle_fiber_e3(double q, int sign, const Eigen::Vector3d& direction) {
    if (q <= 0.0) throw ValidationError("oracle_fiber_e3: q must be positive");
    if (std::abs(direction.norm() - 1.0) > 1e-12)
        throw ValidationError("oracle_fiber_e3: direction must be a unit vector");
    const double s = sign >= 0 ? 1.0 : -1.0;
    const Eigen::Vector3d qv = q * direction;
    Vec x(6);
    x << s * std::sqrt(2.0) * qv[1], -s * std::sqrt(2.0) * qv[0], 0.0,
        qv[0], qv[1], qv[2];
    return x;
}

Vec oracle_fiber_lambda(double c, double lambda, int sign,
                        double theta, double phi) {
    if (c <= 0.0) throw ValidationError("oracle_fiber_lambda: c must be positive");
    if (lambda >= 0.5)
        throw ValidationError("oracle_fiber_lambda: formula singular for lambda >= 1/2");
    const double s = sign >= 0 ? 1.0 : -1.0;
    const double r = c * std::sqrt(1.0 - 2.0 * lambda);  // equatorial semi-axis
    const double q1 = r * std::sin(theta) * std::cos(phi);
    const double q2 = r * std::sin(theta) * std::sin(phi);
    const double q3 = c * std::cos(theta);
    const double scale = std::sqrt(2.0 / (1.0 - 2.0 * lambda));
    Vec x(6);
    x << s * scale * q2, -s * scale * q1, 0.0, q1, q2, q3;
    return x;
}

double oracle_distance_e3(const Vec& x, double q) {
    if (x.size() != 6) throw ValidationError("oracle_distance_e3: expected 6-dim point");
    const Eigen::Vector3d m = x.head<3>();
    Eigen::Vector3d u = x.tail<3>();
    if (u.norm() < 1e-14) u = Eigen::Vector3d::UnitZ();
    u.normalize();

    auto dist_at = [&](const Eigen::Vector3d& dir, double sign) {
        const Vec y = oracle_fiber_e3(q, sign > 0 ? 1 : -1, dir);
        return (x - y).norm();
    };

    double best = std::numeric_limits<double>::infinity();
    for (double sign : {1.0, -1.0}) {
        // pattern search over the sphere parameter, starting from the
        // normalized q-part of x
        Eigen::Vector3d dir = u;
        double d = dist_at(dir, sign);
        double step = 0.1;
        for (int iter = 0; iter < 40 && step > 1e-12; ++iter) {
            bool improved = false;
            const Eigen::Vector3d t1 = dir.unitOrthogonal();
            const Eigen::Vector3d t2 = dir.cross(t1);
            const Eigen::Vector3d probes[4] = {t1, -t1, t2, -t2};
            for (const Eigen::Vector3d& t : probes) {
                Eigen::Vector3d cand = (dir + step * t).normalized();
                const double dc = dist_at(cand, sign);
                if (dc < d) {
                    dir = cand;
                    d = dc;
                    improved = true;
                }
            }
            if (!improved) step *= 0.5;
        }
        best = std::min(best, d);
        (void)m;
    }
    return best;
}

std::vector<MomentImageCell> moment_image(const SystemSpec& sys,
                                          const MomentGrid& grid,
                                          std::uint64_t seed) {
    if (grid.resolution <= 0)
        throw ValidationError("moment_image: resolution must be positive");
    const auto rank0 = find_rank0_points(sys, kRank0Restarts, mix64(seed ^ 0x91e2ULL));

    const double dh = (grid.h_max - grid.h_min) / grid.resolution;
    const double df = (grid.f_max - grid.f_min) / grid.resolution;
    std::vector<MomentImageCell> cells;
    cells.reserve(static_cast<std::size_t>(grid.resolution) * grid.resolution);

    for (int i = 0; i < grid.resolution; ++i) {
        for (int j = 0; j < grid.resolution; ++j) {
            MomentImageCell cell;
            cell.h = grid.h_min + (i + 0.5) * dh;
            cell.f = grid.f_min + (j + 0.5) * df;

            const FiberConstraints fc{sys, MomentValue{cell.h, cell.f}};
            const std::uint64_t cell_seed =
                mix64(seed ^ (static_cast<std::uint64_t>(i) << 20 | static_cast<std::uint64_t>(j)));
            for (int attempt = 0; attempt < 60 && !cell.fiber_exists; ++attempt)
                if (fiber_point_from_restart(fc, cell_seed, attempt))
                    cell.fiber_exists = true;

            for (const auto& pt : rank0) {
                const double h = sys.hamiltonian(pt.location);
                const double f = sys.integral(pt.location);
                if (h >= grid.h_min + i * dh && h < grid.h_min + (i + 1) * dh &&
                    f >= grid.f_min + j * df && f < grid.f_min + (j + 1) * df)
                    ++cell.complexity;
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace focuskit
