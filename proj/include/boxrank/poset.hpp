#pragma once

// Materialized graded posets for the two ideal families Y(lambda) and
// K(kappa). Elements are interned with a dense index (rank-major,
// lexicographic within rank) and cover adjacency is kept in both directions.

#include <boxrank/enumerate.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boxrank {

enum class PosetKind { young, composition, raw };

inline const char* to_string(PosetKind k) {
    switch (k) {
        case PosetKind::young: return "young";
        case PosetKind::composition: return "comp";
        default: return "raw";
    }
}

struct GradedPoset {
    PosetKind kind = PosetKind::raw;
    std::vector<int> generator;                // parts of lambda / kappa (empty for raw)
    std::vector<std::vector<int>> elements;    // part sequences, index = element id
    std::vector<int> rank;                     // rank[e] = |elements[e]| for the ideal families
    std::vector<std::vector<int>> up;          // e -> elements covering e, ascending
    std::vector<std::vector<int>> down;        // e -> elements covered by e, ascending
    std::vector<std::vector<int>> levels;      // rank -> element ids, ascending
    int bottom = -1;
    int top = -1;

    int size() const { return static_cast<int>(elements.size()); }
    int max_rank() const { return static_cast<int>(levels.size()) - 1; }

    std::string element_name(int e) const {
        return "(" + boxrank::to_string(Composition{elements[static_cast<std::size_t>(e)]}) + ")";
    }
};

/// |P_0|, |P_1|, ..., |P_r|.
inline std::vector<Int> rank_sequence(const GradedPoset& P) {
    std::vector<Int> out;
    out.reserve(P.levels.size());
    for (const auto& lvl : P.levels) out.emplace_back(lvl.size());
    return out;
}

namespace detail {

inline void finish_poset(GradedPoset& P) {
    int rmax = 0;
    for (int r : P.rank) rmax = std::max(rmax, r);
    P.levels.assign(static_cast<std::size_t>(rmax) + 1, {});
    for (int e = 0; e < P.size(); ++e)
        P.levels[static_cast<std::size_t>(P.rank[static_cast<std::size_t>(e)])].push_back(e);
    for (auto& adj : P.up) std::sort(adj.begin(), adj.end());
    for (auto& adj : P.down) std::sort(adj.begin(), adj.end());
    P.bottom = P.levels.front().empty() ? -1 : P.levels.front().front();
    P.top = P.levels.back().empty() ? -1 : P.levels.back().front();
}

template <typename Element, typename CoverCandidates>
GradedPoset build_ideal_poset(PosetKind kind, std::vector<int> generator,
                              const std::vector<std::vector<Element>>& buckets,
                              CoverCandidates&& candidates) {
    GradedPoset P;
    P.kind = kind;
    P.generator = std::move(generator);

    std::map<std::vector<int>, int> index;
    for (const auto& bucket : buckets)
        for (const auto& el : bucket) {
            P.elements.push_back(el.parts);
            P.rank.push_back(el.weight());
            index.emplace(el.parts, P.size() - 1);
        }
    P.up.assign(P.elements.size(), {});
    P.down.assign(P.elements.size(), {});

    // Local cover rule; membership in the ideal is the index lookup.
    for (int e = 0; e < P.size(); ++e)
        for (std::vector<int>& cand : candidates(P.elements[static_cast<std::size_t>(e)])) {
            auto it = index.find(cand);
            if (it == index.end()) continue;
            P.up[static_cast<std::size_t>(e)].push_back(it->second);
            P.down[static_cast<std::size_t>(it->second)].push_back(e);
        }

    finish_poset(P);
    return P;
}

}  // namespace detail

/// The principal lower order ideal of lambda in Young's lattice, with covers.
/// mu is covered by nu iff nu adds a single box to mu's diagram.
inline GradedPoset build_Y(const Partition& lambda) {
    if (!lambda.valid()) throw std::invalid_argument("build_Y: invalid partition");
    return detail::build_ideal_poset(
        PosetKind::young, lambda.parts, ideal_elements_Y(lambda), [](const std::vector<int>& mu) {
            std::vector<std::vector<int>> out;
            for (std::size_t i = 0; i < mu.size(); ++i) {
                if (i > 0 && mu[i] + 1 > mu[i - 1]) continue;  // must stay weakly decreasing
                std::vector<int> nu = mu;
                ++nu[i];
                out.push_back(std::move(nu));
            }
            std::vector<int> nu = mu;
            nu.push_back(1);
            out.push_back(std::move(nu));
            return out;
        });
}

/// The principal lower order ideal of kappa in the composition poset.
/// gamma is covered by delta iff delta increments one part of gamma by 1 or
/// appends a trailing part 1.
inline GradedPoset build_K(const Composition& kappa) {
    if (!kappa.valid()) throw std::invalid_argument("build_K: invalid composition");
    return detail::build_ideal_poset(
        PosetKind::composition, kappa.parts, ideal_elements_K(kappa),
        [](const std::vector<int>& gamma) {
            std::vector<std::vector<int>> out;
            for (std::size_t i = 0; i < gamma.size(); ++i) {
                std::vector<int> delta = gamma;
                ++delta[i];
                out.push_back(std::move(delta));
            }
            std::vector<int> delta = gamma;
            delta.push_back(1);
            out.push_back(std::move(delta));
            return out;
        });
}

/// Raw constructor for tests and hand-built counterexamples. No validation;
/// run validate_graded to get a report.
inline GradedPoset make_raw_poset(std::vector<std::vector<int>> elements, std::vector<int> ranks,
                                  const std::vector<std::pair<int, int>>& covers) {
    if (elements.size() != ranks.size())
        throw std::invalid_argument("make_raw_poset: elements/ranks size mismatch");
    GradedPoset P;
    P.kind = PosetKind::raw;
    P.elements = std::move(elements);
    P.rank = std::move(ranks);
    P.up.assign(P.elements.size(), {});
    P.down.assign(P.elements.size(), {});
    for (auto [lo, hi] : covers) {
        P.up[static_cast<std::size_t>(lo)].push_back(hi);
        P.down[static_cast<std::size_t>(hi)].push_back(lo);
    }
    detail::finish_poset(P);
    return P;
}

struct Issue {
    std::string kind;           // e.g. "rank-jump", "unreachable", "duplicate-element"
    std::vector<int> elements;  // offending element ids (chain id for chain issues)
    int chain = -1;
    std::string message;
};

struct Report {
    bool ok = true;
    std::vector<Issue> issues;

    void add(Issue issue) {
        ok = false;
        issues.push_back(std::move(issue));
    }

    std::string summary() const {
        if (ok) return "ok";
        std::string s;
        for (const auto& i : issues) {
            if (!s.empty()) s += "; ";
            s += i.message;
        }
        return s;
    }
};

/// Structural check: covers raise rank by exactly 1, unique bottom and top,
/// every element reachable from the bottom along covers, no empty rank.
inline Report validate_graded(const GradedPoset& P) {
    Report rep;
    if (P.size() == 0) {
        rep.add({"empty", {}, -1, "poset has no elements"});
        return rep;
    }

    for (int e = 0; e < P.size(); ++e)
        for (int f : P.up[static_cast<std::size_t>(e)]) {
            int de = P.rank[static_cast<std::size_t>(e)];
            int df = P.rank[static_cast<std::size_t>(f)];
            if (df != de + 1)
                rep.add({"rank-jump",
                         {e, f},
                         -1,
                         "cover " + P.element_name(e) + " -> " + P.element_name(f) +
                             " changes rank by " + std::to_string(df - de)});
        }

    for (std::size_t r = 0; r < P.levels.size(); ++r)
        if (P.levels[r].empty())
            rep.add({"empty-rank", {}, -1, "rank " + std::to_string(r) + " has no elements"});

    if (P.levels.front().size() != 1)
        rep.add({"bottom-not-unique", P.levels.front(), -1,
                 "rank 0 has " + std::to_string(P.levels.front().size()) + " elements"});
    if (P.levels.back().size() != 1)
        rep.add({"top-not-unique", P.levels.back(), -1,
                 "max rank has " + std::to_string(P.levels.back().size()) + " elements"});

    if (P.bottom < 0) {
        rep.add({"no-bottom", {}, -1, "rank 0 is empty; no bottom element"});
        return rep;
    }

    // reachability from the bottom along up edges
    std::vector<char> seen(static_cast<std::size_t>(P.size()), 0);
    std::vector<int> stack{P.bottom};
    seen[static_cast<std::size_t>(P.bottom)] = 1;
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        for (int f : P.up[static_cast<std::size_t>(e)])
            if (!seen[static_cast<std::size_t>(f)]) {
                seen[static_cast<std::size_t>(f)] = 1;
                stack.push_back(f);
            }
    }
    std::vector<int> unreachable;
    for (int e = 0; e < P.size(); ++e)
        if (!seen[static_cast<std::size_t>(e)]) unreachable.push_back(e);
    if (!unreachable.empty())
        rep.add({"unreachable", unreachable, -1,
                 std::to_string(unreachable.size()) + " element(s) unreachable from the bottom"});

    return rep;
}

}  // namespace boxrank
