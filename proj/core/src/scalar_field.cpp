#include "focuskit/scalar_field.hpp"

#include <cmath>
#include <utility>

namespace focuskit {

namespace {

double fd_step(double xi) { return 1e-5 * (1.0 + std::abs(xi)); }

Vec central_grad(const ScalarField::EvalFn& f, const Vec& x, const std::function<double(double)>& step) {
    const int n = static_cast<int>(x.size());
    Vec g(n);
    Vec xp = x, xm = x;
    for (int i = 0; i < n; ++i) {
        const double h = step(x[i]);
        xp[i] = x[i] + h;
        xm[i] = x[i] - h;
        g[i] = (f(xp) - f(xm)) / (2.0 * h);
        xp[i] = x[i];
        xm[i] = x[i];
    }
    return g;
}

Mat central_hess(const ScalarField::EvalFn& f, const Vec& x, const std::function<double(double)>& step) {
    const int n = static_cast<int>(x.size());
    Mat h(n, n);
    const double f0 = f(x);
    Vec y = x;
    for (int i = 0; i < n; ++i) {
        const double hi = step(x[i]);
        y[i] = x[i] + hi;
        const double fp = f(y);
        y[i] = x[i] - hi;
        const double fm = f(y);
        y[i] = x[i];
        h(i, i) = (fp - 2.0 * f0 + fm) / (hi * hi);
        for (int j = i + 1; j < n; ++j) {
            const double hj = step(x[j]);
            y[i] = x[i] + hi; y[j] = x[j] + hj;
            const double fpp = f(y);
            y[j] = x[j] - hj;
            const double fpm = f(y);
            y[i] = x[i] - hi;
            const double fmm = f(y);
            y[j] = x[j] + hj;
            const double fmp = f(y);
            y[i] = x[i]; y[j] = x[j];
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
            h(i, j) = v;
            h(j, i) = v;  // cross formula is symmetric in (i,j) by construction
        }
    }
    return h;
}

}  // namespace

ScalarField::ScalarField(int dim, EvalFn eval, GradFn grad, HessFn hess)
    : dim_(dim), mode_(DerivativeMode::analytic),
      eval_(std::move(eval)), grad_(std::move(grad)), hess_(std::move(hess)) {
    if (dim <= 0) throw ValidationError("ScalarField: dim must be positive");
}

ScalarField::ScalarField(int dim, EvalFn eval)
    : dim_(dim), mode_(DerivativeMode::finite_difference), eval_(std::move(eval)) {
    if (dim <= 0) throw ValidationError("ScalarField: dim must be positive");
    auto f = eval_;
    grad_ = [f](const Vec& x) { return central_grad(f, x, fd_step); };
    hess_ = [f](const Vec& x) { return central_hess(f, x, fd_step); };
}

void ScalarField::check_dim(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw ValidationError("ScalarField: point has wrong dimension");
}

double ScalarField::operator()(const Vec& x) const {
    check_dim(x);
    return eval_(x);
}

Vec ScalarField::grad(const Vec& x) const {
    check_dim(x);
    return grad_(x);
}

Mat ScalarField::hess(const Vec& x) const {
    check_dim(x);
    return hess_(x);
}

namespace {

double eval_terms(const std::vector<Monomial>& terms, const Vec& x) {
    double s = 0.0;
    for (const auto& t : terms) {
        double v = t.coeff;
        for (int i = 0; i < static_cast<int>(t.exponents.size()); ++i)
            for (int k = 0; k < t.exponents[i]; ++k) v *= x[i];
        s += v;
    }
    return s;
}

// d/dx_i of one monomial, as value at x.
double term_partial(const Monomial& t, const Vec& x, int i) {
    if (t.exponents[i] == 0) return 0.0;
    double v = t.coeff * t.exponents[i];
    for (int j = 0; j < static_cast<int>(t.exponents.size()); ++j) {
        const int e = (j == i) ? t.exponents[j] - 1 : t.exponents[j];
        for (int k = 0; k < e; ++k) v *= x[j];
    }
    return v;
}

double term_partial2(const Monomial& t, const Vec& x, int i, int j) {
    Monomial d = t;
    if (d.exponents[i] == 0) return 0.0;
    d.coeff *= d.exponents[i];
    d.exponents[i] -= 1;
    return term_partial(d, x, j);
}

}  // namespace

ScalarField make_polynomial_field(int dim, const std::vector<Monomial>& terms) {
    if (dim <= 0) throw ValidationError("make_polynomial_field: dim must be positive");
    for (const auto& t : terms) {
        if (static_cast<int>(t.exponents.size()) != dim)
            throw ValidationError("make_polynomial_field: exponent vector of wrong length");
        for (int e : t.exponents)
            if (e < 0) throw ValidationError("make_polynomial_field: negative exponent");
    }
    auto eval = [terms](const Vec& x) { return eval_terms(terms, x); };
    auto grad = [terms, dim](const Vec& x) {
        Vec g = Vec::Zero(dim);
        for (const auto& t : terms)
            for (int i = 0; i < dim; ++i) g[i] += term_partial(t, x, i);
        return g;
    };
    auto hess = [terms, dim](const Vec& x) {
        Mat h = Mat::Zero(dim, dim);
        for (const auto& t : terms)
            for (int i = 0; i < dim; ++i)
                for (int j = i; j < dim; ++j) {
                    const double v = term_partial2(t, x, i, j);
                    h(i, j) += v;
                    if (j != i) h(j, i) += v;
                }
        return h;
    };
    return ScalarField(dim, eval, grad, hess);
}

ScalarField linear_combination(double aa, const ScalarField& f, double bb, const ScalarField& g) {
    if (f.dim() != g.dim())
        throw ValidationError("linear_combination: dimension mismatch");
    const int n = f.dim();
    return ScalarField(
        n,
        [aa, bb, f, g](const Vec& x) { return aa * f(x) + bb * g(x); },
        [aa, bb, f, g](const Vec& x) -> Vec { return aa * f.grad(x) + bb * g.grad(x); },
        [aa, bb, f, g](const Vec& x) -> Mat { return aa * f.hess(x) + bb * g.hess(x); });
}

ScalarField constant_field(int dim, double value) {
    return ScalarField(
        dim,
        [value](const Vec&) { return value; },
        [dim](const Vec&) -> Vec { return Vec::Zero(dim); },
        [dim](const Vec&) -> Mat { return Mat::Zero(dim, dim); });
}

ScalarField coordinate_field(int dim, int index) {
    if (index < 0 || index >= dim)
        throw ValidationError("coordinate_field: index out of range");
    Monomial t;
    t.coeff = 1.0;
    t.exponents.assign(dim, 0);
    t.exponents[index] = 1;
    return make_polynomial_field(dim, {t});
}

std::vector<Monomial> multiply_terms(const std::vector<Monomial>& a,
                                     const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            if (ta.exponents.size() != tb.exponents.size())
                throw ValidationError("multiply_terms: dimension mismatch");
            Monomial t;
            t.coeff = ta.coeff * tb.coeff;
            t.exponents.resize(ta.exponents.size());
            for (std::size_t i = 0; i < t.exponents.size(); ++i)
                t.exponents[i] = ta.exponents[i] + tb.exponents[i];
            out.push_back(std::move(t));
        }
    return out;
}

DerivativeCheckReport finite_difference_check(const ScalarField& f, const Vec& x, double step) {
    if (step <= 0.0) throw ValidationError("finite_difference_check: step must be positive");
    auto eval = [&f](const Vec& y) { return f(y); };
    auto fixed = [step](double) { return step; };
    const Vec gd = central_grad(eval, x, fixed);
    const Mat hd = central_hess(eval, x, fixed);
    DerivativeCheckReport r;
    r.max_grad_error = (f.grad(x) - gd).cwiseAbs().maxCoeff();
    r.max_hess_error = (f.hess(x) - hd).cwiseAbs().maxCoeff();
    return r;
}

}  // namespace focuskit
