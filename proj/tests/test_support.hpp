#pragma once

// Shared helpers for the test suites: deterministic random generators and a
// plain Pascal-triangle binomial, independent of the library's q-machinery.

#include <boxrank/poly.hpp>

#include <random>
#include <vector>

namespace test_support {

inline boxrank::Poly ipoly(std::initializer_list<long> coeffs) {
    std::vector<boxrank::Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return boxrank::Poly(std::move(c));
}

inline boxrank::Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<boxrank::Int> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

/// Weakly increasing then weakly decreasing nonnegative integer coefficients;
/// unimodal by construction (trailing zeros are trimmed by Poly).
inline boxrank::Poly random_unimodal_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<int> step(0, 4);
    const int r = deg_dist(rng);
    std::uniform_int_distribution<int> mode_dist(0, r);
    const int m = mode_dist(rng);
    std::vector<boxrank::Rational> c(static_cast<std::size_t>(r) + 1);
    long v = step(rng);
    for (int i = 0; i <= r; ++i) {
        if (i > 0) {
            if (i <= m)
                v += step(rng);
            else
                v = std::max(v - step(rng), 0L);
        }
        c[static_cast<std::size_t>(i)] = v;
    }
    return boxrank::Poly(std::move(c));
}

inline boxrank::Poly random_poly(std::mt19937& rng, int max_degree, int max_coeff) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<int> coeff(0, max_coeff);
    const int r = deg_dist(rng);
    std::vector<boxrank::Rational> c(static_cast<std::size_t>(r) + 1);
    for (auto& x : c) x = coeff(rng);
    return boxrank::Poly(std::move(c));
}

}  // namespace test_support
