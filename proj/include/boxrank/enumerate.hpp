#pragma once

// Brute-force generation of partitions and compositions under containment
// constraints. These enumerators are the independent oracle the generating
// function recurrences are tested against, so they stay deliberately naive:
// depth-first generation in lexicographic order, bucketed by weight.

#include <boxrank/poly.hpp>

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxrank {

/// Weakly decreasing sequence of positive parts. (1) < (1,1) < (2) in lex order.
struct Partition {
    std::vector<int> parts;

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    bool valid() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) return false;
            if (i > 0 && parts[i] > parts[i - 1]) return false;
        }
        return true;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts <=> b.parts; }
};

/// Arbitrary finite sequence of positive parts; the empty composition is valid.
struct Composition {
    std::vector<int> parts;

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    bool valid() const {
        for (int p : parts)
            if (p < 1) return false;
        return true;
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts <=> b.parts; }
};

/// Bounding box: at most k parts, each of size at most l.
struct Rectangle {
    int k = 1;
    int l = 1;
};

inline void require_rect(const Rectangle& r) {
    if (r.k < 1 || r.l < 1)
        throw std::invalid_argument("rectangle: need k >= 1 and l >= 1, got k=" +
                                    std::to_string(r.k) + " l=" + std::to_string(r.l));
}

/// The partition (l^k).
inline Partition rect_partition(const Rectangle& r) {
    require_rect(r);
    return Partition{std::vector<int>(static_cast<std::size_t>(r.k), r.l)};
}

inline Composition rect_composition(const Rectangle& r) {
    require_rect(r);
    return Composition{std::vector<int>(static_cast<std::size_t>(r.k), r.l)};
}

/// mu <= lambda in Young's lattice: componentwise containment of diagrams.
inline bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 0; i < mu.parts.size(); ++i)
        if (mu.parts[i] > lambda.parts[i]) return false;
    return true;
}

/// gamma <= kappa in the composition poset: top-aligned row containment.
inline bool contains(const Composition& kappa, const Composition& gamma) {
    if (gamma.length() > kappa.length()) return false;
    for (std::size_t i = 0; i < gamma.parts.size(); ++i)
        if (gamma.parts[i] > kappa.parts[i]) return false;
    return true;
}

/// "3,1,4,1"; the empty string denotes the empty composition.
inline std::string to_string(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.parts[i]);
    }
    return s;
}

inline std::string to_string(const Partition& p) { return to_string(Composition{p.parts}); }

namespace detail {

inline std::vector<int> parse_parts(std::string_view s, const char* what) {
    std::vector<int> parts;
    if (s.empty()) return parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        bool ok = !tok.empty();
        long v = 0;
        for (char ch : tok) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                ok = false;
                break;
            }
            v = v * 10 + (ch - '0');
            if (v > 1'000'000) {
                ok = false;
                break;
            }
        }
        if (!ok || v < 1)
            throw std::invalid_argument(std::string(what) + ": bad part \"" + std::string(tok) +
                                        "\" in \"" + std::string(s) + "\"");
        parts.push_back(static_cast<int>(v));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

}  // namespace detail

inline Composition parse_composition(std::string_view s) {
    return Composition{detail::parse_parts(s, "composition")};
}

inline Partition parse_partition(std::string_view s) {
    Partition p{detail::parse_parts(s, "partition")};
    if (!p.valid())
        throw std::invalid_argument("partition: parts must be weakly decreasing in \"" +
                                    std::string(s) + "\"");
    return p;
}

/// All partitions mu contained in lambda, grouped by weight; bucket n lists
/// the weight-n elements in lexicographic generation order. Bucket sizes are
/// the rank sequence of Y(lambda).
inline std::vector<std::vector<Partition>> ideal_elements_Y(const Partition& lambda) {
    if (!lambda.valid()) throw std::invalid_argument("ideal_elements_Y: invalid partition");
    std::vector<std::vector<Partition>> buckets(static_cast<std::size_t>(lambda.weight()) + 1);
    std::vector<int> cur;
    auto rec = [&](auto&& self, int prev, int total) -> void {
        buckets[static_cast<std::size_t>(total)].push_back(Partition{cur});
        const std::size_t i = cur.size();
        if (i >= lambda.parts.size()) return;
        const int hi = std::min(prev, lambda.parts[i]);
        for (int v = 1; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v, total + v);
            cur.pop_back();
        }
    };
    rec(rec, lambda.parts.empty() ? 0 : lambda.parts[0], 0);
    return buckets;
}

/// All compositions gamma contained in kappa, grouped by weight, lexicographic
/// within each bucket. Bucket sizes are the rank sequence of K(kappa).
inline std::vector<std::vector<Composition>> ideal_elements_K(const Composition& kappa) {
    if (!kappa.valid()) throw std::invalid_argument("ideal_elements_K: invalid composition");
    std::vector<std::vector<Composition>> buckets(static_cast<std::size_t>(kappa.weight()) + 1);
    std::vector<int> cur;
    auto rec = [&](auto&& self, int total) -> void {
        buckets[static_cast<std::size_t>(total)].push_back(Composition{cur});
        const std::size_t i = cur.size();
        if (i >= kappa.parts.size()) return;
        for (int v = 1; v <= kappa.parts[i]; ++v) {
            cur.push_back(v);
            self(self, total + v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return buckets;
}

/// Count of partitions of n with at most k parts each at most l, for
/// 0 <= n <= kl. Pure enumeration; intended for desk-scale k, l.
inline std::vector<Int> partitions_in_rect(const Rectangle& r) {
    require_rect(r);
    std::vector<Int> counts(static_cast<std::size_t>(r.k) * r.l + 1, Int(0));
    std::vector<int> cur;
    auto rec = [&](auto&& self, int prev, int total) -> void {
        ++counts[static_cast<std::size_t>(total)];
        if (static_cast<int>(cur.size()) >= r.k) return;
        for (int v = 1; v <= std::min(prev, r.l); ++v) {
            cur.push_back(v);
            self(self, v, total + v);
            cur.pop_back();
        }
    };
    rec(rec, r.l, 0);
    return counts;
}

/// Count of compositions of n with at most k parts, each in [1,l].
inline std::vector<Int> compositions_in_rect(const Rectangle& r) {
    require_rect(r);
    std::vector<Int> counts(static_cast<std::size_t>(r.k) * r.l + 1, Int(0));
    std::vector<int> cur;
    auto rec = [&](auto&& self, int total) -> void {
        ++counts[static_cast<std::size_t>(total)];
        if (static_cast<int>(cur.size()) >= r.k) return;
        for (int v = 1; v <= r.l; ++v) {
            cur.push_back(v);
            self(self, total + v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return counts;
}

inline std::vector<Int> bucket_sizes(const std::vector<std::vector<Partition>>& buckets) {
    std::vector<Int> out;
    out.reserve(buckets.size());
    for (const auto& b : buckets) out.emplace_back(b.size());
    return out;
}

inline std::vector<Int> bucket_sizes(const std::vector<std::vector<Composition>>& buckets) {
    std::vector<Int> out;
    out.reserve(buckets.size());
    for (const auto& b : buckets) out.emplace_back(b.size());
    return out;
}

}  // namespace boxrank
