#pragma once

#include <functional>
#include <vector>

#include "focuskit/common.hpp"

namespace focuskit {

enum class DerivativeMode { analytic, finite_difference };

/// A smooth real function on R^n with value, gradient and Hessian access.
/// Immutable after construction; safe for concurrent reads.
class ScalarField {
public:
    using EvalFn = std::function<double(const Vec&)>;
    using GradFn = std::function<Vec(const Vec&)>;
    using HessFn = std::function<Mat(const Vec&)>;

    /// Analytic-mode field: caller supplies consistent derivatives.
    ScalarField(int dim, EvalFn eval, GradFn grad, HessFn hess);

    /// Finite-difference mode: derivatives are central differences of eval
    /// with the scale-aware step h_i = 1e-5 * (1 + |x_i|).
    ScalarField(int dim, EvalFn eval);

    int dim() const { return dim_; }
    DerivativeMode mode() const { return mode_; }

    double operator()(const Vec& x) const;
    double value(const Vec& x) const { return (*this)(x); }
    Vec grad(const Vec& x) const;
    Mat hess(const Vec& x) const;

private:
    void check_dim(const Vec& x) const;

    int dim_;
    DerivativeMode mode_;
    EvalFn eval_;
    GradFn grad_;
    HessFn hess_;
};

/// One monomial coeff * prod_i x_i^exponents[i].
struct Monomial {
    double coeff = 0.0;
    std::vector<int> exponents;
};

/// Polynomial field with term-by-term analytic gradient and Hessian.
/// Rejects dim <= 0, exponent vectors of wrong length, negative exponents.
ScalarField make_polynomial_field(int dim, const std::vector<Monomial>& terms);

/// aa*f + bb*g as one analytic field (dims must match).
ScalarField linear_combination(double aa, const ScalarField& f, double bb, const ScalarField& g);

ScalarField constant_field(int dim, double value);

/// Coordinate function x -> x[index].
ScalarField coordinate_field(int dim, int index);

/// Product of two term lists (convolution of exponents); dims must match.
std::vector<Monomial> multiply_terms(const std::vector<Monomial>& a,
                                     const std::vector<Monomial>& b);

struct DerivativeCheckReport {
    double max_grad_error = 0.0;
    double max_hess_error = 0.0;
};

/// Max discrepancy between analytic derivatives of f and central differences
/// of its values at x with the given step. Report-only.
DerivativeCheckReport finite_difference_check(const ScalarField& f, const Vec& x, double step);

}  // namespace focuskit
