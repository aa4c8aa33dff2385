#pragma once

// Modal chain decomposition existence, decided by per-level saturating
// matchings.
//
// Reduction: a decomposition of a graded poset into saturated chains is the
// same data as one partial matching per consecutive rank pair (P_i, P_{i+1})
// using only cover edges — each element has at most one chain successor and
// at most one chain predecessor, and any such choice yields disjoint
// saturated paths. A chain misses rank m exactly when it tops out below m
// (some element of P_i, i < m, left unmatched upward) or bottoms out above m
// (some element of P_{i+1}, i >= m, left unmatched downward). The level
// conditions are therefore independent, and an MCD through P_m exists iff
//   - for every i < m some matching saturates P_i into P_{i+1}, and
//   - for every i >= m some matching saturates P_{i+1} into P_i.
// A maximum matching per level answers both directions at once (it saturates
// a side iff its size equals that side), and taking the union of the per-level
// maximum matchings assembles a witness decomposition that works for every
// feasible m simultaneously. Failure at a level is certified by a Hall
// violator: a set S on the required side with fewer cover-neighbors than |S|.

#include <boxrank/chains.hpp>
#include <boxrank/poset.hpp>

#include <optional>
#include <set>
#include <stdexcept>

namespace boxrank {

enum class MatchDirection { up, down };  // up: saturate P_i; down: saturate P_{i+1}

inline const char* to_string(MatchDirection d) {
    return d == MatchDirection::up ? "up" : "down";
}

/// Matching between consecutive ranks; the witness (or refutation) of one
/// level obligation. Pairs are (element of P_level, element of P_{level+1}).
struct LevelMatching {
    int level = 0;
    MatchDirection direction = MatchDirection::up;
    bool saturated = false;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> violator;              // Hall violator on the required side
    std::vector<int> violator_neighborhood; // its cover-neighborhood, |N| < |S|
};

namespace detail {

/// Maximum matching on the cover graph between P_level and P_{level+1} by
/// augmenting paths; deterministic under the poset's element numbering.
/// Returns match_up[e] = partner above (or -1), indexed by element id.
struct LevelMaxMatching {
    std::vector<std::pair<int, int>> pairs;  // (lower, upper), ascending by lower
    std::size_t lower_size = 0, upper_size = 0;

    bool saturates_lower() const { return pairs.size() == lower_size; }
    bool saturates_upper() const { return pairs.size() == upper_size; }
};

inline LevelMaxMatching level_max_matching(const GradedPoset& P, int level) {
    if (level < 0 || level >= P.max_rank())
        throw std::invalid_argument("level_max_matching: rank " + std::to_string(level) +
                                    " out of range [0," + std::to_string(P.max_rank() - 1) + "]");
    const auto& lower = P.levels[static_cast<std::size_t>(level)];
    const auto& upper = P.levels[static_cast<std::size_t>(level) + 1];

    std::map<int, int> match_of_upper;  // upper id -> lower id
    std::map<int, int> match_of_lower;  // lower id -> upper id

    auto augment = [&](auto&& self, int x, std::set<int>& seen) -> bool {
        for (int y : P.up[static_cast<std::size_t>(x)]) {
            if (seen.count(y)) continue;
            seen.insert(y);
            auto it = match_of_upper.find(y);
            if (it == match_of_upper.end() || self(self, it->second, seen)) {
                match_of_upper[y] = x;
                match_of_lower[x] = y;
                return true;
            }
        }
        return false;
    };

    for (int x : lower) {
        std::set<int> seen;
        augment(augment, x, seen);
    }

    LevelMaxMatching out;
    out.lower_size = lower.size();
    out.upper_size = upper.size();
    for (int x : lower) {
        auto it = match_of_lower.find(x);
        if (it != match_of_lower.end()) out.pairs.emplace_back(x, it->second);
    }
    return out;
}

/// Hall violator on the required side, from alternating reachability out of
/// the unmatched required vertices.
inline void extract_violator(const GradedPoset& P, const LevelMaxMatching& mm, int level,
                             MatchDirection dir, LevelMatching& out) {
    const bool up_dir = dir == MatchDirection::up;
    const auto& required = P.levels[static_cast<std::size_t>(level) + (up_dir ? 0 : 1)];
    std::map<int, int> partner;  // on the other side -> required-side partner
    std::set<int> matched_required;
    for (auto [lo, hi] : mm.pairs) {
        partner[up_dir ? hi : lo] = up_dir ? lo : hi;
        matched_required.insert(up_dir ? lo : hi);
    }

    auto neighbors = [&](int e) -> const std::vector<int>& {
        return up_dir ? P.up[static_cast<std::size_t>(e)] : P.down[static_cast<std::size_t>(e)];
    };

    std::set<int> side_seen, other_seen;
    std::vector<int> stack;
    for (int e : required)
        if (!matched_required.count(e)) {
            side_seen.insert(e);
            stack.push_back(e);
        }
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        for (int f : neighbors(e)) {
            if (other_seen.count(f)) continue;
            other_seen.insert(f);
            auto it = partner.find(f);
            if (it != partner.end() && !side_seen.count(it->second)) {
                side_seen.insert(it->second);
                stack.push_back(it->second);
            }
        }
    }
    out.violator.assign(side_seen.begin(), side_seen.end());
    out.violator_neighborhood.assign(other_seen.begin(), other_seen.end());
    assert(out.violator_neighborhood.size() < out.violator.size());
}

}  // namespace detail

/// Maximum matching at one level plus the saturation verdict for the given
/// direction; on failure the result carries a Hall violator certificate.
inline LevelMatching level_saturating_matching(const GradedPoset& P, int level,
                                               MatchDirection dir) {
    detail::LevelMaxMatching mm = detail::level_max_matching(P, level);
    LevelMatching out;
    out.level = level;
    out.direction = dir;
    out.pairs = mm.pairs;
    out.saturated = dir == MatchDirection::up ? mm.saturates_lower() : mm.saturates_upper();
    if (!out.saturated) detail::extract_violator(P, mm, level, dir, out);
    return out;
}

struct McdResult {
    bool feasible = false;
    int modal_rank = 0;                   // the requested m
    ChainDecomposition cd;                // populated iff feasible
    std::optional<LevelMatching> failure; // first failing level, when available
};

namespace detail {

inline std::vector<LevelMaxMatching> all_level_matchings(const GradedPoset& P) {
    std::vector<LevelMaxMatching> out;
    out.reserve(static_cast<std::size_t>(P.max_rank()));
    for (int i = 0; i < P.max_rank(); ++i) out.push_back(level_max_matching(P, i));
    return out;
}

/// Disjoint saturated paths of the union of per-level matchings, ordered by
/// their bottom element id.
inline ChainDecomposition assemble_chains(const GradedPoset& P,
                                          const std::vector<LevelMaxMatching>& levels) {
    std::vector<int> next(static_cast<std::size_t>(P.size()), -1);
    std::vector<int> prev(static_cast<std::size_t>(P.size()), -1);
    for (const auto& mm : levels)
        for (auto [lo, hi] : mm.pairs) {
            next[static_cast<std::size_t>(lo)] = hi;
            prev[static_cast<std::size_t>(hi)] = lo;
        }
    ChainDecomposition cd;
    for (int e = 0; e < P.size(); ++e) {
        if (prev[static_cast<std::size_t>(e)] >= 0) continue;
        Chain ch;
        for (int x = e; x >= 0; x = next[static_cast<std::size_t>(x)]) ch.elements.push_back(x);
        cd.chains.push_back(std::move(ch));
    }
    return cd;
}

inline void require_rank(const GradedPoset& P, int m, const char* what) {
    if (m < 0 || m > P.max_rank())
        throw std::invalid_argument(std::string(what) + ": rank " + std::to_string(m) +
                                    " out of range [0," + std::to_string(P.max_rank()) + "]");
}

}  // namespace detail

/// Decide whether an MCD through P_m exists. On success returns the assembled
/// witness decomposition; on failure, the first level whose obligation cannot
/// be met, with its Hall violator.
inline McdResult mcd_decide(const GradedPoset& P, int m) {
    detail::require_rank(P, m, "mcd_decide");
    const auto levels = detail::all_level_matchings(P);

    McdResult out;
    out.modal_rank = m;
    for (int i = 0; i < P.max_rank(); ++i) {
        const bool need_up = i < m;
        const bool ok = need_up ? levels[static_cast<std::size_t>(i)].saturates_lower()
                                : levels[static_cast<std::size_t>(i)].saturates_upper();
        if (!ok) {
            out.feasible = false;
            out.failure = level_saturating_matching(
                P, i, need_up ? MatchDirection::up : MatchDirection::down);
            return out;
        }
    }
    out.feasible = true;
    out.cd = detail::assemble_chains(P, levels);
    assert(modal_ranks_of_cd(P, out.cd).count(m) == 1);
    return out;
}

/// All m for which mcd_decide succeeds. One maximum matching per level
/// answers every m.
inline std::vector<int> modal_ranks(const GradedPoset& P) {
    const auto levels = detail::all_level_matchings(P);
    const int r = P.max_rank();
    std::vector<char> up_ok(static_cast<std::size_t>(r) + 1, 1);
    std::vector<char> down_ok(static_cast<std::size_t>(r) + 1, 1);
    for (int i = 0; i < r; ++i)  // up_ok[m]: all levels below m saturate upward
        up_ok[static_cast<std::size_t>(i) + 1] =
            up_ok[static_cast<std::size_t>(i)] && levels[static_cast<std::size_t>(i)].saturates_lower();
    for (int i = r - 1; i >= 0; --i)
        down_ok[static_cast<std::size_t>(i)] = down_ok[static_cast<std::size_t>(i) + 1] &&
                                               levels[static_cast<std::size_t>(i)].saturates_upper();
    std::vector<int> out;
    for (int m = 0; m <= r; ++m)
        if (up_ok[static_cast<std::size_t>(m)] && down_ok[static_cast<std::size_t>(m)])
            out.push_back(m);
    return out;
}

/// Exhaustive oracle: backtracking over all decompositions into saturated
/// chains, each chain required to meet rank m. Independent of the matching
/// reduction; limited to 20 elements.
inline McdResult brute_force_mcd(const GradedPoset& P, int m) {
    detail::require_rank(P, m, "brute_force_mcd");
    if (P.size() > 20)
        throw std::invalid_argument("brute_force_mcd: poset has " + std::to_string(P.size()) +
                                    " elements, limit is 20");

    const int n = P.size();
    std::map<std::uint32_t, bool> memo;  // assigned-element mask -> feasible remainder
    std::vector<Chain> stack;
    McdResult out;
    out.modal_rank = m;

    auto rec = [&](auto&& self, std::uint32_t mask) -> bool {
        if (mask == (std::uint32_t{1} << n) - 1) {
            out.cd.chains = stack;
            return true;
        }
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        int e = 0;
        while (mask >> e & 1) ++e;
        bool feasible = false;
        // e is the bottom of its chain in any decomposition of the remainder
        if (P.rank[static_cast<std::size_t>(e)] <= m) {
            std::vector<int> chain{e};
            auto grow = [&](auto&& growself, std::uint32_t mask2) -> bool {
                const int last = chain.back();
                if (P.rank[static_cast<std::size_t>(last)] >= m) {
                    stack.push_back(Chain{chain});
                    if (self(self, mask2)) return true;
                    stack.pop_back();
                }
                for (int y : P.up[static_cast<std::size_t>(last)]) {
                    if (mask2 >> y & 1) continue;
                    chain.push_back(y);
                    if (growself(growself, mask2 | (std::uint32_t{1} << y))) return true;
                    chain.pop_back();
                }
                return false;
            };
            feasible = grow(grow, mask | (std::uint32_t{1} << e));
        }
        memo.emplace(mask, feasible);
        return feasible;
    };

    out.feasible = rec(rec, 0);
    if (!out.feasible) out.cd.chains.clear();
    return out;
}

/// One conjecture-scan row for the poset K(l^k).
struct ScanRow {
    int k = 0;
    int l = 0;
    int predicted_m = 0;       // ceil(k(l+1)/2) - 1
    std::vector<int> feasible; // all feasible modal ranks
    bool agree = false;        // predicted_m is feasible
};

inline int predicted_modal_rank(int k, int l) { return (k * (l + 1) + 1) / 2 - 1; }

/// Feasible modal ranks of K(l^k) against the predicted location, for all
/// 1 <= k <= kmax, 1 <= l <= lmax. Reports, never asserts.
inline std::vector<ScanRow> conjecture_scan(int kmax, int lmax) {
    if (kmax < 1 || lmax < 1) throw std::invalid_argument("conjecture_scan: need kmax,lmax >= 1");
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(kmax) * static_cast<std::size_t>(lmax));
    for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= lmax; ++l) {
            ScanRow row;
            row.k = k;
            row.l = l;
            row.predicted_m = predicted_modal_rank(k, l);
            row.feasible = modal_ranks(build_K(rect_composition(Rectangle{k, l})));
            row.agree = std::binary_search(row.feasible.begin(), row.feasible.end(),
                                           row.predicted_m);
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace boxrank
