#pragma once

// Rank generating polynomials for the three poset families:
//   p_rect  — partitions in a k x l box (Gaussian binomial),
//   f_rect  — compositions in a k x l box, via f^{k,l} = 1 + q[l] f^{k-1,l},
//   f_ideal — compositions below a fixed kappa, via f^{K(kappa)} = 1 + q[l] f^{K(gamma)}.

#include <boxrank/enumerate.hpp>
#include <boxrank/poly.hpp>

namespace boxrank {

/// Rank generating polynomial of Y(l^k): the Gaussian binomial of k+l over l.
inline Poly p_rect(int k, int l) {
    require_rect(Rectangle{k, l});
    Poly p = q_binomial(k + l, l);
    assert(p.degree() == k * l && p.integer_valued());
    return p;
}

/// Rank generating polynomial of K(l^k). Built iteratively from the base case
/// f^{1,l} = [l+1]; each step wraps f -> 1 + q[l]f, adding l to the degree.
inline Poly f_rect(int k, int l) {
    require_rect(Rectangle{k, l});
    Poly f = q_int(l + 1);
    const Poly ql = q_int(l);
    for (int i = 2; i <= k; ++i) f = Poly::one() + shift(ql * f, 1);
    assert(f.degree() == k * l && f.integer_valued());
    return f;
}

/// Rank generating polynomial of K(kappa); the empty composition gives the
/// constant 1. Right-to-left sweep over the parts, innermost suffix first.
inline Poly f_ideal(const Composition& kappa) {
    if (!kappa.valid()) throw std::invalid_argument("f_ideal: invalid composition");
    Poly f = Poly::one();
    for (auto it = kappa.parts.rbegin(); it != kappa.parts.rend(); ++it)
        f = Poly::one() + shift(q_int(*it) * f, 1);
    assert(f.degree() == (kappa.parts.empty() ? 0 : kappa.weight()) && f.integer_valued());
    return f;
}

}  // namespace boxrank
