#pragma once

// Serialization of library values to JSON, CSV, and line-oriented text.
// Machine formats are deterministic: fixed key order where it matters, no
// timestamps, rationals as "num/den" strings (integers bare), never floats.

#include <boxrank/chains.hpp>
#include <boxrank/mcd.hpp>
#include <boxrank/poly.hpp>
#include <boxrank/poset.hpp>

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>

namespace boxrank {

using json = nlohmann::ordered_json;

inline std::string to_string(const Rational& v) {
    std::ostringstream os;
    os << numerator(v);
    if (denominator(v) != 1) os << '/' << denominator(v);
    return os.str();
}

inline std::string to_string(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline Rational parse_rational(const std::string& s) {
    const auto bad = [&] {
        return std::invalid_argument("bad rational \"" + s + "\"");
    };
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    for (const std::string* part : {&num, &den}) {
        if (part->empty()) throw bad();
        for (std::size_t i = 0; i < part->size(); ++i) {
            char c = (*part)[i];
            if (c == '-' && i == 0 && part->size() > 1) continue;
            if (c < '0' || c > '9') throw bad();
        }
    }
    Int d(den);
    if (d == 0) throw bad();
    return Rational(Int(num), d);
}

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    const int deg = std::max(p.degree(), 0);
    for (int i = 0; i <= deg; ++i) arr.push_back(to_string(p.coeff(i)));
    return arr;
}

inline Poly poly_from_json(const json& arr) {
    std::vector<Rational> c;
    for (const auto& v : arr) c.push_back(parse_rational(v.get<std::string>()));
    return Poly(std::move(c));
}

inline json profile_to_json(const SequenceProfile& pr, const std::vector<int>& dips) {
    return json{{"degree", pr.degree},
                {"unimodal", pr.unimodal},
                {"log_concave", pr.log_concave},
                {"symmetric", pr.symmetric},
                {"mode_indices", pr.mode_indices},
                {"dip_indices", dips}};
}

inline json counts_to_json(const std::vector<Int>& counts) {
    json arr = json::array();
    for (const Int& n : counts) arr.push_back(to_string(n));
    return arr;
}

// ---- posets ----------------------------------------------------------------

inline json poset_to_json(const GradedPoset& P) {
    json elements = json::array();
    for (int e = 0; e < P.size(); ++e)
        elements.push_back(json{{"index", e},
                                {"rank", P.rank[static_cast<std::size_t>(e)]},
                                {"parts", to_string(Composition{P.elements[static_cast<std::size_t>(e)]})}});
    json covers = json::array();
    for (int e = 0; e < P.size(); ++e)
        for (int f : P.up[static_cast<std::size_t>(e)]) covers.push_back(json::array({e, f}));
    return json{{"kind", to_string(P.kind)},
                {"generator", to_string(Composition{P.generator})},
                {"size", P.size()},
                {"rank_sequence", counts_to_json(rank_sequence(P))},
                {"bottom", P.bottom},
                {"top", P.top},
                {"elements", elements},
                {"covers", covers}};
}

/// Line-oriented export for external tooling:
///   poset <kind> <generator>
///   ranks <|P_0|> <|P_1|> ...
///   element <index> <rank> <parts or ()>
///   cover <lower> <upper>
inline void poset_to_text(std::ostream& os, const GradedPoset& P) {
    os << "poset " << to_string(P.kind) << ' '
       << (P.generator.empty() ? "()" : to_string(Composition{P.generator})) << '\n';
    os << "ranks";
    for (const Int& n : rank_sequence(P)) os << ' ' << n;
    os << '\n';
    for (int e = 0; e < P.size(); ++e)
        os << "element " << e << ' ' << P.rank[static_cast<std::size_t>(e)] << ' '
           << P.element_name(e) << '\n';
    for (int e = 0; e < P.size(); ++e)
        for (int f : P.up[static_cast<std::size_t>(e)]) os << "cover " << e << ' ' << f << '\n';
}

// ---- chain decompositions ---------------------------------------------------

/// List of lists of composition strings, bottom to top ("" is the empty
/// composition).
inline json cd_to_json(const GradedPoset& P, const ChainDecomposition& cd) {
    json out = json::array();
    for (const Chain& ch : cd.chains) {
        json chain = json::array();
        for (int e : ch.elements)
            chain.push_back(to_string(Composition{P.elements[static_cast<std::size_t>(e)]}));
        out.push_back(std::move(chain));
    }
    return out;
}

/// Rebuilds a decomposition from its JSON form against a poset; unknown
/// element strings throw.
inline ChainDecomposition cd_from_json(const GradedPoset& P, const json& arr) {
    std::map<std::vector<int>, int> index;
    for (int e = 0; e < P.size(); ++e)
        index.emplace(P.elements[static_cast<std::size_t>(e)], e);
    ChainDecomposition cd;
    for (const auto& chain : arr) {
        Chain ch;
        for (const auto& el : chain) {
            Composition c = parse_composition(el.get<std::string>());
            auto it = index.find(c.parts);
            if (it == index.end())
                throw std::invalid_argument("cd_from_json: element \"" + el.get<std::string>() +
                                            "\" is not in the poset");
            ch.elements.push_back(it->second);
        }
        cd.chains.push_back(std::move(ch));
    }
    return cd;
}

inline json report_to_json(const Report& rep) {
    json issues = json::array();
    for (const Issue& i : rep.issues) {
        json entry{{"kind", i.kind}, {"message", i.message}};
        if (!i.elements.empty()) entry["elements"] = i.elements;
        if (i.chain >= 0) entry["chain"] = i.chain;
        issues.push_back(std::move(entry));
    }
    return json{{"ok", rep.ok}, {"issues", issues}};
}

inline json matching_to_json(const GradedPoset& P, const LevelMatching& lm) {
    json pairs = json::array();
    for (auto [lo, hi] : lm.pairs) pairs.push_back(json::array({lo, hi}));
    json out{{"level", lm.level},
             {"direction", to_string(lm.direction)},
             {"saturated", lm.saturated},
             {"pairs", pairs}};
    if (!lm.saturated) {
        json viol = json::array(), nbhd = json::array();
        for (int e : lm.violator)
            viol.push_back(to_string(Composition{P.elements[static_cast<std::size_t>(e)]}));
        for (int e : lm.violator_neighborhood)
            nbhd.push_back(to_string(Composition{P.elements[static_cast<std::size_t>(e)]}));
        out["violator"] = std::move(viol);
        out["violator_neighborhood"] = std::move(nbhd);
    }
    return out;
}

// ---- csv --------------------------------------------------------------------

inline std::string csv_cell(const std::vector<int>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(values[i]);
    }
    return s;
}

inline void scan_to_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "k,l,predicted_m,feasible,agree\n";
    for (const ScanRow& r : rows)
        os << r.k << ',' << r.l << ',' << r.predicted_m << ',' << csv_cell(r.feasible) << ','
           << (r.agree ? "true" : "false") << '\n';
}

inline json scan_to_json(const std::vector<ScanRow>& rows) {
    json arr = json::array();
    for (const ScanRow& r : rows)
        arr.push_back(json{{"k", r.k},
                           {"l", r.l},
                           {"predicted_m", r.predicted_m},
                           {"feasible", r.feasible},
                           {"agree", r.agree}});
    return arr;
}

}  // namespace boxrank
