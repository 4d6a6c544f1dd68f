#pragma once

#include <complex>
#include <vector>

#include "focuskit/poisson.hpp"
#include "focuskit/rng.hpp"

namespace focuskit::testutil {

inline Vec point6(double m1, double m2, double m3, double q1, double q2, double q3) {
    Vec x(6);
    x << m1, m2, m3, q1, q2, q3;
    return x;
}

inline Vec point4(double a, double b, double c, double d) {
    Vec x(4);
    x << a, b, c, d;
    return x;
}

inline std::vector<Monomial> random_terms(std::mt19937_64& gen, int dim,
                                          int max_terms = 4, int max_degree = 2) {
    std::vector<Monomial> terms;
    const int n_terms = 1 + static_cast<int>(gen() % max_terms);
    for (int t = 0; t < n_terms; ++t) {
        Monomial m;
        m.coeff = uniform(gen, -2.0, 2.0);
        m.exponents.assign(dim, 0);
        const int degree = static_cast<int>(gen() % (max_degree + 1));
        for (int d = 0; d < degree; ++d) m.exponents[gen() % dim] += 1;
        terms.push_back(std::move(m));
    }
    return terms;
}

// Greedy multiset matching of a computed spectrum against expected values.
inline bool spectrum_matches(const std::vector<std::complex<double>>& eigs,
                             std::vector<std::complex<double>> expected,
                             double tol) {
    for (const auto& e : eigs) {
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

}  // namespace focuskit::testutil
