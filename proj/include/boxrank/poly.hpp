#pragma once

// Exact polynomial arithmetic over the rationals with q-analogues and
// sequence-shape predicates (unimodal / log-concave / symmetric).
//
// Coefficients are arbitrary-precision rationals so that non-integer
// counterexamples (e.g. 1+q+q^2+(23/10)q^3+2q^4) are representable exactly.
// Every counting path in the library produces integer values; callers on
// those paths assert integer_valued() in debug builds.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxrank {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in q; index i holds the coefficient of q^i.
/// Canonical form: no trailing zero is stored, so the zero polynomial has an
/// empty coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly one() { return constant(1); }

    static Poly constant(const Rational& v) {
        Poly p;
        if (v != 0) p.c_.push_back(v);
        return p;
    }

    static Poly from_counts(const std::vector<Int>& counts) {
        std::vector<Rational> c;
        c.reserve(counts.size());
        for (const Int& n : counts) c.emplace_back(n);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    /// -1 for the zero polynomial (degree is -inf conceptually).
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    /// Sum of coefficients = evaluation at q=1.
    Rational eval_one() const {
        Rational s = 0;
        for (const auto& a : c_) s += a;
        return s;
    }

    bool integer_valued() const {
        for (const auto& a : c_)
            if (denominator(a) != 1) return false;
        return true;
    }

    friend Poly operator+(const Poly& p, const Poly& r) {
        std::vector<Rational> c(std::max(p.c_.size(), r.c_.size()), Rational(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
        for (std::size_t i = 0; i < r.c_.size(); ++i) c[i] += r.c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& p, const Poly& r) {
        if (p.is_zero() || r.is_zero()) return Poly();
        std::vector<Rational> c(p.c_.size() + r.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i] == 0) continue;
            for (std::size_t j = 0; j < r.c_.size(); ++j)
                c[i + j] += p.c_[i] * r.c_[j];
        }
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& p, const Poly& r) { return p.c_ == r.c_; }
    friend bool operator!=(const Poly& p, const Poly& r) { return !(p == r); }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        os << '[';
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (i) os << ", ";
            os << p.c_[i];
        }
        return os << ']';
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Multiply by q^d.
inline Poly shift(const Poly& p, int d) {
    if (d < 0) throw std::invalid_argument("shift: exponent must be >= 0");
    if (p.is_zero() || d == 0) return p;
    std::vector<Rational> c(static_cast<std::size_t>(d), Rational(0));
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly(std::move(c));
}

/// The q-integer [n] = 1 + q + ... + q^{n-1}.
inline Poly q_int(int n) {
    if (n < 1) throw std::invalid_argument("q_int: n must be >= 1, got " + std::to_string(n));
    return Poly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

/// Gaussian binomial coefficient of a over b, an integer polynomial of degree
/// b(a-b). Computed by the q-Pascal recurrence
///   [a,b] = [a-1,b-1] + q^b [a-1,b]
/// with a rolling row, never by division.
inline Poly q_binomial(int a, int b) {
    if (a < 0 || b < 0 || b > a)
        throw std::invalid_argument("q_binomial: need 0 <= b <= a, got a=" +
                                    std::to_string(a) + " b=" + std::to_string(b));
    std::vector<Poly> row(static_cast<std::size_t>(b) + 1);  // row for a'=0: [0,0]=1, rest 0
    row[0] = Poly::one();
    for (int i = 1; i <= a; ++i)
        for (int j = std::min(i, b); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + shift(row[static_cast<std::size_t>(j)], j);
    Poly result = row[static_cast<std::size_t>(b)];
    assert(result.degree() == b * (a - b));
    return result;
}

/// Shape flags of a coefficient sequence a_0..a_r (r = degree; the zero
/// polynomial is viewed as the length-1 sequence [0]).
struct SequenceProfile {
    bool unimodal = false;
    bool log_concave = false;
    bool symmetric = false;
    std::vector<int> mode_indices;  // all m with a_0<=..<=a_m>=..>=a_r, ascending
    int degree = 0;                 // r of the examined sequence
};

inline SequenceProfile profile(const Poly& p) {
    std::vector<Rational> a = p.coeffs();
    if (a.empty()) a.emplace_back(0);
    const std::size_t n = a.size();

    SequenceProfile out;
    out.degree = static_cast<int>(n) - 1;

    std::vector<char> inc(n, 1), dec(n, 1);
    for (std::size_t i = 1; i < n; ++i) inc[i] = inc[i - 1] && a[i - 1] <= a[i];
    for (std::size_t i = n - 1; i-- > 0;) dec[i] = dec[i + 1] && a[i] >= a[i + 1];
    for (std::size_t m = 0; m < n; ++m)
        if (inc[m] && dec[m]) out.mode_indices.push_back(static_cast<int>(m));
    out.unimodal = !out.mode_indices.empty();

    out.log_concave = true;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) {
            out.log_concave = false;
            break;
        }

    out.symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != a[n - 1 - i]) {
            out.symmetric = false;
            break;
        }

    return out;
}

/// Indices that witness non-unimodality: i such that some earlier entry and
/// some later entry both exceed a_i. Empty iff the sequence is unimodal.
inline std::vector<int> dip_indices(const Poly& p) {
    std::vector<Rational> a = p.coeffs();
    if (a.empty()) a.emplace_back(0);
    const std::size_t n = a.size();

    std::vector<Rational> pref(n), suf(n);
    pref[0] = a[0];
    for (std::size_t i = 1; i < n; ++i) pref[i] = std::max(pref[i - 1], a[i]);
    suf[n - 1] = a[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) suf[i] = std::max(suf[i + 1], a[i]);

    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (pref[i - 1] > a[i] && suf[i + 1] > a[i]) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace boxrank
