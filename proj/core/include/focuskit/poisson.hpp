#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "focuskit/scalar_field.hpp"

namespace focuskit {

/// Point-dependent antisymmetric bracket tensor with its Casimir list.
/// Immutable after construction.
class PoissonStructure {
public:
    using TensorFn = std::function<Mat(const Vec&)>;

    PoissonStructure(int dim, std::string name, TensorFn tensor,
                     std::vector<ScalarField> casimirs);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    Mat tensor(const Vec& x) const;
    const std::vector<ScalarField>& casimirs() const { return casimirs_; }

private:
    int dim_;
    std::string name_;
    TensorFn tensor_;
    std::vector<ScalarField> casimirs_;
};

/// One structure constant: {x_i, x_j} contains value * x_k.
struct StructureConstant {
    int i = 0;
    int j = 0;
    int k = 0;
    double value = 0.0;
};

/// Canonical bracket on R^4 with coordinates (p1, p2, q1, q2); no Casimirs.
PoissonStructure canonical_r4();

/// The bracket family on R^6(m, q):
///   {m_i, m_j} = eps_ijk m_k, {m_i, q_j} = eps_ijk q_k,
///   {q_i, q_j} = lambda * eps_ijk m_k.
/// lambda = 0 is e(3)*, lambda = 1 is so(4)*. Casimirs are
/// f1 = lambda*|m|^2 + |q|^2 and f2 = m.q.
PoissonStructure lambda_structure(double lambda);

PoissonStructure e3_structure();   // lambda_structure(0), named "e3"
PoissonStructure so4_structure();  // lambda_structure(1), named "so4"

/// Generic Lie-Poisson structure from a user structure-constant table.
/// The table is antisymmetrized-checked at load: c^k_ij = -c^k_ji.
PoissonStructure lie_poisson(int dim, const std::vector<StructureConstant>& table,
                             std::string name = "custom");

/// A coadjoint orbit (or all of R^n when there are no Casimirs): a Poisson
/// structure together with target Casimir values.
struct OrbitSpec {
    PoissonStructure structure;
    Vec casimir_values;
};

/// An integrable system on an orbit: Hamiltonian H plus second integral F.
struct SystemSpec {
    std::string name;
    OrbitSpec orbit;
    ScalarField hamiltonian;
    ScalarField integral;
};

/// {f, g}(x) = grad f(x)^T pi(x) grad g(x).
double bracket(const PoissonStructure& ps, const ScalarField& f,
               const ScalarField& g, const Vec& x);

/// Hamiltonian vector field pi(x) grad h(x).
Vec sgrad(const PoissonStructure& ps, const ScalarField& h, const Vec& x);

/// Jacobian of x -> sgrad(ps, h, x). The tensor derivative is taken by
/// central differences (exact for the affine tensors of every Lie-Poisson
/// and canonical structure); the field part uses the analytic Hessian.
Mat sgrad_jacobian(const PoissonStructure& ps, const ScalarField& h, const Vec& x);

/// Max over coordinate triples (i,j,k) of the cyclic Jacobi-identity sum
/// sum_l (pi_il d_l pi_jk + pi_jl d_l pi_ki + pi_kl d_l pi_ij) at x.
/// Tensor derivatives by central differences (exact for affine tensors).
double jacobi_defect(const PoissonStructure& ps, const Vec& x);

/// Max-abs residual of the orbit's Casimir constraints at x.
double orbit_residual(const OrbitSpec& orbit, const Vec& x);

/// Newton projection onto the orbit's Casimir level set.
std::optional<Vec> project_to_orbit(const OrbitSpec& orbit, const Vec& x0,
                                    double tol = 1e-12, int max_iter = 50);

/// Uniform draw in [lo,hi]^n projected onto the orbit; retries draws until
/// the projection converges.
Vec sample_orbit_point(const OrbitSpec& orbit, std::mt19937_64& gen,
                       double lo = -2.0, double hi = 2.0);

/// max |{H, F}(x)| over n_samples points projected onto the orbit.
double involution_defect(const SystemSpec& sys, int n_samples, std::uint64_t seed);

/// so(4)* <-> so(3)* + so(3)* change of coordinates:
/// m = s + p, q = p - s; both maps are linear and mutually inverse.
Vec sp_to_mq(const Vec& sp);
Vec mq_to_sp(const Vec& mq);

/// Built-in systems:
///  - "canonical4":   canonical R^4 focus model f1 = p.q, f2 = p1 q2 - p2 q1
///  - "remark-r4":    H = (p1^2+p2^2)/2 + (q1^2+q2^2-1)^2, F = p1 q2 - p2 q1
///  - "e3-form41":    H = |m|^2/2 + q3^2, G = m3 on the e(3)* orbit (1, 0)
///  - "lambda-form41": the same pair under the lambda-family bracket (0.1)
std::vector<SystemSpec> catalog();

/// Built-in Hamiltonian/integral pairs by name; throws ValidationError for
/// unknown names. casimir_values/lambda override the catalog defaults.
SystemSpec builtin_system(const std::string& name,
                          std::optional<Vec> casimir_values = std::nullopt,
                          std::optional<double> lambda = std::nullopt);

}  // namespace focuskit
