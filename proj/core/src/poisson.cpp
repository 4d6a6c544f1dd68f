#include "focuskit/poisson.hpp"

#include <cmath>
#include <utility>

#include "focuskit/newton.hpp"
#include "focuskit/rng.hpp"

namespace focuskit {

namespace {

constexpr double kLambdaForm41Default = 0.1;

// Levi-Civita symbol on {0,1,2}.
double eps3(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    const bool even = (i + 1) % 3 == j;  // (0,1,2), (1,2,0), (2,0,1)
    return even ? 1.0 : -1.0;
}

Monomial mono(int dim, double coeff, std::initializer_list<std::pair<int, int>> powers) {
    Monomial t;
    t.coeff = coeff;
    t.exponents.assign(dim, 0);
    for (auto [idx, e] : powers) t.exponents[idx] = e;
    return t;
}

}  // namespace

PoissonStructure::PoissonStructure(int dim, std::string name, TensorFn tensor,
                                   std::vector<ScalarField> casimirs)
    : dim_(dim), name_(std::move(name)), tensor_(std::move(tensor)),
      casimirs_(std::move(casimirs)) {
    if (dim <= 0) throw ValidationError("PoissonStructure: dim must be positive");
    for (const auto& c : casimirs_)
        if (c.dim() != dim)
            throw ValidationError("PoissonStructure: Casimir dimension mismatch");
}

Mat PoissonStructure::tensor(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw ValidationError("PoissonStructure: point has wrong dimension");
    return tensor_(x);
}

PoissonStructure canonical_r4() {
    Mat pi = Mat::Zero(4, 4);
    pi.block<2, 2>(0, 2) = -Mat::Identity(2, 2);
    pi.block<2, 2>(2, 0) = Mat::Identity(2, 2);
    return PoissonStructure(4, "canonical4",
                            [pi](const Vec&) { return pi; }, {});
}

PoissonStructure lambda_structure(double lambda) {
    auto tensor = [lambda](const Vec& x) {
        Mat pi = Mat::Zero(6, 6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    const double e = eps3(i, j, k);
                    if (e == 0.0) continue;
                    pi(i, j) += e * x[k];                    // {m_i, m_j}
                    pi(i, j + 3) += e * x[k + 3];            // {m_i, q_j}
                    pi(i + 3, j) += e * x[k + 3];            // {q_i, m_j}
                    pi(i + 3, j + 3) += lambda * e * x[k];   // {q_i, q_j}
                }
        return pi;
    };
    // f1 = lambda |m|^2 + |q|^2, f2 = m.q
    std::vector<Monomial> f1_terms;
    for (int i = 0; i < 3; ++i) {
        if (lambda != 0.0) f1_terms.push_back(mono(6, lambda, {{i, 2}}));
        f1_terms.push_back(mono(6, 1.0, {{i + 3, 2}}));
    }
    std::vector<Monomial> f2_terms;
    for (int i = 0; i < 3; ++i) f2_terms.push_back(mono(6, 1.0, {{i, 1}, {i + 3, 1}}));

    std::string name = lambda == 0.0 ? "e3" : (lambda == 1.0 ? "so4" : "lambda");
    return PoissonStructure(6, std::move(name), tensor,
                            {make_polynomial_field(6, f1_terms),
                             make_polynomial_field(6, f2_terms)});
}

PoissonStructure e3_structure() { return lambda_structure(0.0); }
PoissonStructure so4_structure() { return lambda_structure(1.0); }

PoissonStructure lie_poisson(int dim, const std::vector<StructureConstant>& table,
                             std::string name) {
    // dense c[i][j][k]
    std::vector<double> c(static_cast<std::size_t>(dim) * dim * dim, 0.0);
    auto at = [dim, &c](int i, int j, int k) -> double& {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    };
    for (const auto& sc : table) {
        if (sc.i < 0 || sc.i >= dim || sc.j < 0 || sc.j >= dim || sc.k < 0 || sc.k >= dim)
            throw ValidationError("lie_poisson: structure constant index out of range");
        at(sc.i, sc.j, sc.k) += sc.value;
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (std::abs(at(i, j, k) + at(j, i, k)) > 1e-12)
                    throw ValidationError("lie_poisson: structure constants not antisymmetric in (i,j)");
    auto tensor = [dim, c](const Vec& x) {
        Mat pi = Mat::Zero(dim, dim);
        auto cat = [dim, &c](int i, int j, int k) {
            return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
        };
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) pi(i, j) += cat(i, j, k) * x[k];
        return pi;
    };
    return PoissonStructure(dim, std::move(name), tensor, {});
}

double bracket(const PoissonStructure& ps, const ScalarField& f,
               const ScalarField& g, const Vec& x) {
    if (f.dim() != ps.dim() || g.dim() != ps.dim())
        throw ValidationError("bracket: dimension mismatch");
    return f.grad(x).dot(ps.tensor(x) * g.grad(x));
}

Vec sgrad(const PoissonStructure& ps, const ScalarField& h, const Vec& x) {
    if (h.dim() != ps.dim())
        throw ValidationError("sgrad: dimension mismatch");
    return ps.tensor(x) * h.grad(x);
}

Mat sgrad_jacobian(const PoissonStructure& ps, const ScalarField& h, const Vec& x) {
    const int n = ps.dim();
    const Vec g = h.grad(x);
    Mat jac = ps.tensor(x) * h.hess(x);
    Vec y = x;
    for (int j = 0; j < n; ++j) {
        const double step = 1e-4 * (1.0 + std::abs(x[j]));
        y[j] = x[j] + step;
        const Mat pip = ps.tensor(y);
        y[j] = x[j] - step;
        const Mat pim = ps.tensor(y);
        y[j] = x[j];
        jac.col(j) += ((pip - pim) / (2.0 * step)) * g;
    }
    return jac;
}

double jacobi_defect(const PoissonStructure& ps, const Vec& x) {
    const int n = ps.dim();
    const Mat pi = ps.tensor(x);
    std::vector<Mat> dpi(n);
    Vec y = x;
    for (int l = 0; l < n; ++l) {
        const double step = 1e-4 * (1.0 + std::abs(x[l]));
        y[l] = x[l] + step;
        const Mat pip = ps.tensor(y);
        y[l] = x[l] - step;
        const Mat pim = ps.tensor(y);
        y[l] = x[l];
        dpi[l] = (pip - pim) / (2.0 * step);
    }
    double defect = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                double s = 0.0;
                for (int l = 0; l < n; ++l)
                    s += pi(i, l) * dpi[l](j, k) + pi(j, l) * dpi[l](k, i) +
                         pi(k, l) * dpi[l](i, j);
                defect = std::max(defect, std::abs(s));
            }
    return defect;
}

double orbit_residual(const OrbitSpec& orbit, const Vec& x) {
    const auto& cs = orbit.structure.casimirs();
    double r = 0.0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        r = std::max(r, std::abs(cs[i](x) - orbit.casimir_values[i]));
    return r;
}

std::optional<Vec> project_to_orbit(const OrbitSpec& orbit, const Vec& x0,
                                    double tol, int max_iter) {
    const auto& cs = orbit.structure.casimirs();
    if (static_cast<int>(cs.size()) != orbit.casimir_values.size())
        throw ValidationError("project_to_orbit: casimir_values length mismatch");
    if (cs.empty()) return x0;
    const int k = static_cast<int>(cs.size());
    auto residual = [&](const Vec& x) {
        Vec r(k);
        for (int i = 0; i < k; ++i) r[i] = cs[i](x) - orbit.casimir_values[i];
        return r;
    };
    auto jacobian = [&](const Vec& x) {
        Mat j(k, x.size());
        for (int i = 0; i < k; ++i) j.row(i) = cs[i].grad(x).transpose();
        return j;
    };
    NewtonOptions opts;
    opts.tol = tol;
    opts.accept_tol = 1e-10;
    opts.max_iter = max_iter;
    return gauss_newton(residual, jacobian, x0, opts);
}

Vec sample_orbit_point(const OrbitSpec& orbit, std::mt19937_64& gen,
                       double lo, double hi) {
    const int n = orbit.structure.dim();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Vec x0 = uniform_vec(gen, n, lo, hi);
        if (auto x = project_to_orbit(orbit, x0)) return *x;
    }
    throw NumericalError("sample_orbit_point: projection kept diverging");
}

double involution_defect(const SystemSpec& sys, int n_samples, std::uint64_t seed) {
    if (n_samples < 1)
        throw ValidationError("involution_defect: n_samples must be >= 1");
    double defect = 0.0;
    for (int s = 0; s < n_samples; ++s) {
        auto gen = substream(seed, static_cast<std::uint64_t>(s));
        const Vec x = sample_orbit_point(sys.orbit, gen);
        defect = std::max(defect,
                          std::abs(bracket(sys.orbit.structure, sys.hamiltonian,
                                           sys.integral, x)));
    }
    return defect;
}

Vec sp_to_mq(const Vec& sp) {
    if (sp.size() != 6) throw ValidationError("sp_to_mq: expected 6-dimensional input");
    Vec mq(6);
    for (int i = 0; i < 3; ++i) {
        mq[i] = sp[i] + sp[i + 3];      // m = s + p
        mq[i + 3] = sp[i + 3] - sp[i];  // q = p - s
    }
    return mq;
}

Vec mq_to_sp(const Vec& mq) {
    if (mq.size() != 6) throw ValidationError("mq_to_sp: expected 6-dimensional input");
    Vec sp(6);
    for (int i = 0; i < 3; ++i) {
        sp[i] = 0.5 * (mq[i] - mq[i + 3]);      // s = (m - q)/2
        sp[i + 3] = 0.5 * (mq[i] + mq[i + 3]);  // p = (m + q)/2
    }
    return sp;
}

namespace {

ScalarField angular_integral_r4() {
    // f2 = p1 q2 - p2 q1 in coordinates (p1, p2, q1, q2)
    return make_polynomial_field(4, {mono(4, 1.0, {{0, 1}, {3, 1}}),
                                     mono(4, -1.0, {{1, 1}, {2, 1}})});
}

ScalarField form41_hamiltonian() {
    // H = (m1^2 + m2^2 + m3^2)/2 + q3^2
    return make_polynomial_field(6, {mono(6, 0.5, {{0, 2}}), mono(6, 0.5, {{1, 2}}),
                                     mono(6, 0.5, {{2, 2}}), mono(6, 1.0, {{5, 2}})});
}

ScalarField form41_integral() {
    // G = m3
    return coordinate_field(6, 2);
}

}  // namespace

SystemSpec builtin_system(const std::string& name,
                          std::optional<Vec> casimir_values,
                          std::optional<double> lambda) {
    if (name == "canonical4") {
        // canonical focus-focus model: f1 = p1 q1 + p2 q2, f2 = p1 q2 - p2 q1
        ScalarField f1 = make_polynomial_field(
            4, {mono(4, 1.0, {{0, 1}, {2, 1}}), mono(4, 1.0, {{1, 1}, {3, 1}})});
        return SystemSpec{name, OrbitSpec{canonical_r4(), Vec(0)}, f1, angular_integral_r4()};
    }
    if (name == "remark-r4") {
        // H = (p1^2 + p2^2)/2 + (q1^2 + q2^2 - 1)^2, expanded
        ScalarField h = make_polynomial_field(
            4, {mono(4, 0.5, {{0, 2}}), mono(4, 0.5, {{1, 2}}),
                mono(4, 1.0, {{2, 4}}), mono(4, 1.0, {{3, 4}}),
                mono(4, 2.0, {{2, 2}, {3, 2}}),
                mono(4, -2.0, {{2, 2}}), mono(4, -2.0, {{3, 2}}),
                mono(4, 1.0, {})});
        return SystemSpec{name, OrbitSpec{canonical_r4(), Vec(0)}, h, angular_integral_r4()};
    }
    if (name == "e3-form41" || name == "lambda-form41") {
        const double lam = name == "e3-form41" ? 0.0
                                               : lambda.value_or(kLambdaForm41Default);
        Vec cv(2);
        cv << 1.0, 0.0;
        if (casimir_values) cv = *casimir_values;
        if (cv.size() != 2)
            throw ValidationError("builtin_system: expected 2 Casimir values");
        return SystemSpec{name, OrbitSpec{lambda_structure(lam), cv},
                          form41_hamiltonian(), form41_integral()};
    }
    throw ValidationError("builtin_system: unknown system name '" + name + "'");
}

std::vector<SystemSpec> catalog() {
    return {builtin_system("canonical4"), builtin_system("remark-r4"),
            builtin_system("e3-form41"), builtin_system("lambda-form41")};
}

}  // namespace focuskit
