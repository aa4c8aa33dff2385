#pragma once

// Chain decompositions of graded posets: validation, the symmetric / modal
// predicates, and the inductive two-prefix construction for K(2^k).

#include <boxrank/poset.hpp>

#include <set>
#include <stdexcept>

namespace boxrank {

/// Saturated chain, element ids bottom to top.
struct Chain {
    std::vector<int> elements;

    int lo_rank(const GradedPoset& P) const {
        return P.rank[static_cast<std::size_t>(elements.front())];
    }
    int hi_rank(const GradedPoset& P) const {
        return P.rank[static_cast<std::size_t>(elements.back())];
    }
};

struct ChainDecomposition {
    std::vector<Chain> chains;
};

/// Checks saturation of every chain, pairwise disjointness, and coverage of
/// the whole element set.
inline Report validate_cd(const GradedPoset& P, const ChainDecomposition& cd) {
    Report rep;
    std::vector<int> owner(static_cast<std::size_t>(P.size()), -1);
    for (std::size_t c = 0; c < cd.chains.size(); ++c) {
        const auto& ch = cd.chains[c].elements;
        if (ch.empty()) {
            rep.add({"empty-chain", {}, static_cast<int>(c),
                     "chain " + std::to_string(c) + " is empty"});
            continue;
        }
        for (int e : ch) {
            if (e < 0 || e >= P.size()) {
                rep.add({"bad-element", {e}, static_cast<int>(c),
                         "chain " + std::to_string(c) + " references element " + std::to_string(e)});
                continue;
            }
            if (owner[static_cast<std::size_t>(e)] >= 0)
                rep.add({"overlap",
                         {e},
                         static_cast<int>(c),
                         "element " + P.element_name(e) + " appears in chains " +
                             std::to_string(owner[static_cast<std::size_t>(e)]) + " and " +
                             std::to_string(c)});
            else
                owner[static_cast<std::size_t>(e)] = static_cast<int>(c);
        }
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
            const auto& ups = P.up[static_cast<std::size_t>(ch[i])];
            if (!std::binary_search(ups.begin(), ups.end(), ch[i + 1]))
                rep.add({"not-saturated",
                         {ch[i], ch[i + 1]},
                         static_cast<int>(c),
                         "chain " + std::to_string(c) + ": " + P.element_name(ch[i]) +
                             " does not cover-precede " + P.element_name(ch[i + 1])});
        }
    }
    std::vector<int> missing;
    for (int e = 0; e < P.size(); ++e)
        if (owner[static_cast<std::size_t>(e)] < 0) missing.push_back(e);
    if (!missing.empty())
        rep.add({"uncovered", missing, -1,
                 std::to_string(missing.size()) + " element(s) not covered by any chain"});
    return rep;
}

namespace detail {

inline void require_valid_cd(const GradedPoset& P, const ChainDecomposition& cd,
                             const char* what) {
    Report rep = validate_cd(P, cd);
    if (!rep.ok)
        throw std::invalid_argument(std::string(what) + ": invalid chain decomposition: " +
                                    rep.summary());
}

}  // namespace detail

/// True iff every chain from rank a to rank b has a + b = rk(top).
inline bool is_scd(const GradedPoset& P, const ChainDecomposition& cd) {
    detail::require_valid_cd(P, cd, "is_scd");
    const int r = P.max_rank();
    for (const Chain& ch : cd.chains)
        if (ch.lo_rank(P) + ch.hi_rank(P) != r) return false;
    return true;
}

/// All ranks m met by every chain. Since chains are saturated this is the
/// interval [max of chain bottoms, min of chain tops]; empty means the
/// decomposition is not modal.
inline std::set<int> modal_ranks_of_cd(const GradedPoset& P, const ChainDecomposition& cd) {
    detail::require_valid_cd(P, cd, "modal_ranks_of_cd");
    int lo = 0, hi = P.max_rank();
    for (const Chain& ch : cd.chains) {
        lo = std::max(lo, ch.lo_rank(P));
        hi = std::min(hi, ch.hi_rank(P));
    }
    std::set<int> out;
    for (int m = lo; m <= hi; ++m) out.insert(m);
    return out;
}

struct SaganConstruction {
    GradedPoset poset;  // build_K((2^k))
    ChainDecomposition cd;
    std::vector<std::size_t> discarded_per_level;  // [j] = chains dropped when lifting to K(2^j)
};

/// Inductive chain decomposition of K(2^k). Starting from the single chain of
/// K((2)), each level prefixes every chain by 1 and by 2, moves the top of the
/// 2-prefixed chain onto the matching 1-prefixed chain (a cover step: the two
/// tops differ only in the first part), drops chains that become empty, and
/// finally attaches the empty composition to the chain that starts at (1).
/// Always a valid decomposition; whether it is modal is a separate check.
inline SaganConstruction sagan_construction(int k) {
    if (k < 1) throw std::invalid_argument("sagan_construction: need k >= 1");

    using Elem = std::vector<int>;
    std::vector<std::vector<Elem>> chains{{Elem{}, Elem{1}, Elem{2}}};
    std::vector<std::size_t> discarded(static_cast<std::size_t>(k) + 1, 0);

    for (int level = 2; level <= k; ++level) {
        std::vector<std::vector<Elem>> primed, doubled;
        primed.reserve(chains.size());
        doubled.reserve(chains.size());
        for (const auto& chain : chains) {
            std::vector<Elem> cp, cpp;
            cp.reserve(chain.size() + 1);
            cpp.reserve(chain.size());
            for (const Elem& e : chain) {
                Elem a{1}, b{2};
                a.insert(a.end(), e.begin(), e.end());
                b.insert(b.end(), e.begin(), e.end());
                cp.push_back(std::move(a));
                cpp.push_back(std::move(b));
            }
            // tops differ only in the first part, so top(cp) is covered by top(cpp)
            assert(cp.back()[0] + 1 == cpp.back()[0] &&
                   std::equal(cp.back().begin() + 1, cp.back().end(), cpp.back().begin() + 1));
            cp.push_back(cpp.back());
            cpp.pop_back();
            primed.push_back(std::move(cp));
            if (!cpp.empty())
                doubled.push_back(std::move(cpp));
            else
                ++discarded[static_cast<std::size_t>(level)];
        }
        chains = std::move(primed);
        chains.insert(chains.end(), std::make_move_iterator(doubled.begin()),
                      std::make_move_iterator(doubled.end()));
        // exactly one chain starts at (1); it receives the empty composition
        std::size_t hits = 0, at = 0;
        for (std::size_t i = 0; i < chains.size(); ++i)
            if (chains[i].front() == Elem{1}) {
                ++hits;
                at = i;
            }
        assert(hits == 1);
        (void)hits;
        chains[at].insert(chains[at].begin(), Elem{});
    }

    SaganConstruction out;
    out.poset = build_K(rect_composition(Rectangle{k, 2}));
    out.discarded_per_level = std::move(discarded);

    std::map<std::vector<int>, int> index;
    for (int e = 0; e < out.poset.size(); ++e)
        index.emplace(out.poset.elements[static_cast<std::size_t>(e)], e);
    for (const auto& chain : chains) {
        Chain mapped;
        mapped.elements.reserve(chain.size());
        for (const Elem& e : chain) mapped.elements.push_back(index.at(e));
        out.cd.chains.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace boxrank
