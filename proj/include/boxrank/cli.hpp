#pragma once

// Command-line surface. All subcommands write to one stream (stdout or
// --out FILE) in one of three formats. Exit codes: 0 success, 2 invalid
// input, 1 internal failure. `mcd decide` exits 0 whether or not an MCD
// exists — the answer is data.

#include <boxrank/genfun.hpp>
#include <boxrank/io.hpp>
#include <boxrank/mcd.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace boxrank::cli {

enum class OutputFormat { text, json, csv };

namespace detail {

inline void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

inline void seq_output(std::ostream& os, OutputFormat fmt, const char* family, const json& meta,
                       const Poly& poly) {
    const int deg = std::max(poly.degree(), 0);
    switch (fmt) {
        case OutputFormat::csv:
            os << "n,count\n";
            for (int n = 0; n <= deg; ++n) os << n << ',' << to_string(poly.coeff(n)) << '\n';
            break;
        case OutputFormat::json: {
            json out{{"command", "seq"}, {"family", family}};
            out.update(meta);
            out["degree"] = deg;
            out["counts"] = poly_to_json(poly);
            emit_json(os, out);
            break;
        }
        case OutputFormat::text:
            for (int n = 0; n <= deg; ++n) os << n << ' ' << to_string(poly.coeff(n)) << '\n';
            break;
    }
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

inline void check_output(std::ostream& os, OutputFormat fmt, const Poly& poly) {
    const SequenceProfile pr = profile(poly);
    const std::vector<int> dips = dip_indices(poly);
    switch (fmt) {
        case OutputFormat::csv:
            os << "degree,unimodal,log_concave,symmetric,modes,dips\n"
               << pr.degree << ',' << (pr.unimodal ? "true" : "false") << ','
               << (pr.log_concave ? "true" : "false") << ',' << (pr.symmetric ? "true" : "false")
               << ',' << join_ints(pr.mode_indices) << ',' << join_ints(dips) << '\n';
            break;
        case OutputFormat::json: {
            json out{{"command", "check"}, {"coefficients", poly_to_json(poly)}};
            out.update(profile_to_json(pr, dips));
            emit_json(os, out);
            break;
        }
        case OutputFormat::text:
            os << "degree " << pr.degree << '\n'
               << "unimodal " << (pr.unimodal ? "true" : "false") << '\n'
               << "log_concave " << (pr.log_concave ? "true" : "false") << '\n'
               << "symmetric " << (pr.symmetric ? "true" : "false") << '\n'
               << "modes " << join_ints(pr.mode_indices) << '\n'
               << "dips " << join_ints(dips) << '\n';
            break;
    }
}

inline void decide_output(std::ostream& os, OutputFormat fmt, const GradedPoset& P,
                          std::optional<int> rank) {
    json out{{"command", "mcd decide"},
             {"poset", json{{"kind", to_string(P.kind)},
                            {"generator", to_string(Composition{P.generator})},
                            {"size", P.size()}}}};
    if (rank) {
        McdResult res = mcd_decide(P, *rank);
        switch (fmt) {
            case OutputFormat::csv:
                os << "m,feasible,chains\n"
                   << *rank << ',' << (res.feasible ? "true" : "false") << ','
                   << res.cd.chains.size() << '\n';
                return;
            case OutputFormat::json:
                out["rank"] = *rank;
                out["feasible"] = res.feasible;
                if (res.feasible)
                    out["chains"] = cd_to_json(P, res.cd);
                else if (res.failure)
                    out["failure"] = matching_to_json(P, *res.failure);
                emit_json(os, out);
                return;
            case OutputFormat::text:
                os << "poset " << to_string(P.kind) << " ("
                   << to_string(Composition{P.generator}) << ")\n"
                   << "rank " << *rank << '\n'
                   << "feasible " << (res.feasible ? "true" : "false") << '\n';
                if (res.feasible) {
                    os << "chains " << res.cd.chains.size() << '\n';
                    for (std::size_t c = 0; c < res.cd.chains.size(); ++c) {
                        os << "chain " << c << ':';
                        for (int e : res.cd.chains[c].elements) os << ' ' << P.element_name(e);
                        os << '\n';
                    }
                } else if (res.failure) {
                    os << "fail_level " << res.failure->level << '\n'
                       << "fail_direction " << to_string(res.failure->direction) << '\n'
                       << "violator";
                    for (int e : res.failure->violator) os << ' ' << P.element_name(e);
                    os << '\n' << "neighborhood";
                    for (int e : res.failure->violator_neighborhood)
                        os << ' ' << P.element_name(e);
                    os << '\n';
                }
                return;
        }
    }
    const std::vector<int> feasible = modal_ranks(P);
    switch (fmt) {
        case OutputFormat::csv:
            os << "m,feasible\n";
            for (int m = 0; m <= P.max_rank(); ++m)
                os << m << ','
                   << (std::binary_search(feasible.begin(), feasible.end(), m) ? "true" : "false")
                   << '\n';
            return;
        case OutputFormat::json:
            out["feasible_ranks"] = feasible;
            emit_json(os, out);
            return;
        case OutputFormat::text:
            os << "poset " << to_string(P.kind) << " (" << to_string(Composition{P.generator})
               << ")\n"
               << "feasible_ranks " << join_ints(feasible) << '\n';
            return;
    }
}

inline void sagan_output(std::ostream& os, OutputFormat fmt, int k, bool with_report) {
    const SaganConstruction sc = sagan_construction(k);
    const Report rep = validate_cd(sc.poset, sc.cd);
    const std::set<int> modal =
        rep.ok ? modal_ranks_of_cd(sc.poset, sc.cd) : std::set<int>{};
    const std::vector<int> modal_v(modal.begin(), modal.end());
    const int predicted = predicted_modal_rank(k, 2);
    const bool mcd_at_predicted = modal.count(predicted) > 0;

    std::map<std::pair<int, int>, int> spans;
    for (const Chain& ch : sc.cd.chains) ++spans[{ch.lo_rank(sc.poset), ch.hi_rank(sc.poset)}];

    if (fmt == OutputFormat::json) {
        json spans_json = json::array();
        for (const auto& [span, count] : spans)
            spans_json.push_back(json{{"lo", span.first}, {"hi", span.second}, {"count", count}});
        json out{{"command", "mcd sagan"},
                 {"k", k},
                 {"elements", sc.poset.size()},
                 {"valid", rep.ok},
                 {"predicted_rank", predicted},
                 {"modal_ranks", modal_v},
                 {"mcd_at_predicted", mcd_at_predicted},
                 {"discarded_per_level", sc.discarded_per_level},
                 {"spans", spans_json},
                 {"chains", cd_to_json(sc.poset, sc.cd)}};
        if (!rep.ok) out["validation"] = report_to_json(rep);
        emit_json(os, out);
        return;
    }
    os << "k " << k << '\n'
       << "elements " << sc.poset.size() << '\n'
       << "chains " << sc.cd.chains.size() << '\n'
       << "valid " << (rep.ok ? "true" : "false") << '\n'
       << "predicted_rank " << predicted << '\n'
       << "modal_ranks " << join_ints(modal_v) << '\n'
       << "mcd_at_predicted " << (mcd_at_predicted ? "true" : "false") << '\n';
    if (with_report) {
        for (std::size_t j = 2; j < sc.discarded_per_level.size(); ++j)
            os << "discarded level=" << j << ' ' << sc.discarded_per_level[j] << '\n';
        for (const auto& [span, count] : spans)
            os << "span " << span.first << '-' << span.second << ' ' << count << '\n';
    }
}

inline void scan_output(std::ostream& os, OutputFormat fmt, int kmax, int lmax) {
    const std::vector<ScanRow> rows = conjecture_scan(kmax, lmax);
    switch (fmt) {
        case OutputFormat::csv:
            scan_to_csv(os, rows);
            return;
        case OutputFormat::json:
            emit_json(os, json{{"command", "scan"}, {"rows", scan_to_json(rows)}});
            return;
        case OutputFormat::text:
            os << "k l predicted feasible agree\n";
            for (const ScanRow& r : rows)
                os << r.k << ' ' << r.l << ' ' << r.predicted_m << " [" << join_ints(r.feasible)
                   << "] " << (r.agree ? "true" : "false") << '\n';
            return;
    }
}

}  // namespace detail

/// Parse and run. Output goes to `out` (or the --out file), diagnostics to
/// `err`. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"rank sequences, chain decompositions and modal-rank scans for "
                 "partitions and compositions in a box"};
    app.require_subcommand(1);
    app.fallthrough();  // global --format/--out are accepted after subcommand args

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    // seq
    auto* seq = app.add_subcommand("seq", "rank-count sequences");
    seq->require_subcommand(1);
    int seq_k = 1, seq_l = 1;
    std::string seq_kappa;
    auto* seq_part = seq->add_subcommand("partitions", "partitions in a k x l box");
    seq_part->add_option("K", seq_k, "max number of parts")->required();
    seq_part->add_option("L", seq_l, "max part size")->required();
    auto* seq_comp = seq->add_subcommand("compositions", "compositions in a k x l box");
    seq_comp->add_option("K", seq_k, "max number of parts")->required();
    seq_comp->add_option("L", seq_l, "max part size")->required();
    auto* seq_ideal = seq->add_subcommand("ideal", "compositions below KAPPA");
    seq_ideal->add_option("KAPPA", seq_kappa, "composition, e.g. 3,1,4,1")->required();

    // check
    auto* check = app.add_subcommand("check", "profile a coefficient sequence");
    std::string check_coeffs;
    check->add_option("COEFFS", check_coeffs, "comma-separated rationals, e.g. 1,1,2,23/10")
        ->required();

    // poset export
    auto* poset_cmd = app.add_subcommand("poset", "materialized posets");
    poset_cmd->require_subcommand(1);
    auto* poset_export = poset_cmd->add_subcommand("export", "elements, ranks and cover edges");
    std::string poset_kind, poset_spec;
    poset_export->add_option("KIND", poset_kind, "young | comp")->required();
    poset_export->add_option("SPEC", poset_spec, "generator partition/composition")->required();

    // mcd
    auto* mcd = app.add_subcommand("mcd", "modal chain decompositions");
    mcd->require_subcommand(1);
    auto* decide = mcd->add_subcommand("decide", "decide MCD existence via matchings");
    decide->require_subcommand(1);
    int decide_rank = -1;
    auto* rank_opt = decide->add_option("--rank", decide_rank, "modal rank m (default: scan all)");
    int mcd_k = 1, mcd_l = 1;
    std::string mcd_kappa;
    auto* decide_rect = decide->add_subcommand("rect", "the poset K(l^k)");
    decide_rect->add_option("K", mcd_k, "max number of parts")->required();
    decide_rect->add_option("L", mcd_l, "max part size")->required();
    auto* decide_ideal = decide->add_subcommand("ideal", "the poset K(KAPPA)");
    decide_ideal->add_option("KAPPA", mcd_kappa, "composition")->required();

    auto* sagan = mcd->add_subcommand("sagan", "two-prefix construction for K(2^k)");
    int sagan_k = 1;
    bool sagan_report = false;
    sagan->add_option("K", sagan_k, "number of parts")->required();
    sagan->add_flag("--report", sagan_report, "include span histogram and discard counts");

    // scan
    auto* scan = app.add_subcommand("scan", "modal-rank conjecture table over K(l^k)");
    int scan_kmax = 0, scan_lmax = 0;
    scan->add_option("--kmax", scan_kmax, "max k")->required();
    scan->add_option("--lmax", scan_lmax, "max l")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw std::invalid_argument("cannot open output file \"" + out_path + "\"");
        }
        std::ostream& os = out_path.empty() ? out : file;
        const OutputFormat fmt = format == "json"  ? OutputFormat::json
                                 : format == "csv" ? OutputFormat::csv
                                                   : OutputFormat::text;
        const auto no_csv = [&](const char* cmd) {
            if (fmt == OutputFormat::csv)
                throw std::invalid_argument(std::string(cmd) + ": csv output is not available");
        };

        if (*seq_part) {
            require_rect(Rectangle{seq_k, seq_l});
            detail::seq_output(os, fmt, "partitions", json{{"k", seq_k}, {"l", seq_l}},
                               p_rect(seq_k, seq_l));
        } else if (*seq_comp) {
            require_rect(Rectangle{seq_k, seq_l});
            detail::seq_output(os, fmt, "compositions", json{{"k", seq_k}, {"l", seq_l}},
                               f_rect(seq_k, seq_l));
        } else if (*seq_ideal) {
            Composition kappa = parse_composition(seq_kappa);
            detail::seq_output(os, fmt, "ideal", json{{"kappa", to_string(kappa)}},
                               f_ideal(kappa));
        } else if (*check) {
            std::vector<Rational> coeffs;
            std::stringstream ss(check_coeffs);
            std::string tok;
            while (std::getline(ss, tok, ',')) coeffs.push_back(parse_rational(tok));
            if (coeffs.empty()) throw std::invalid_argument("check: empty coefficient list");
            detail::check_output(os, fmt, Poly(std::move(coeffs)));
        } else if (*poset_export) {
            no_csv("poset export");
            GradedPoset P;
            if (poset_kind == "young")
                P = build_Y(parse_partition(poset_spec));
            else if (poset_kind == "comp")
                P = build_K(parse_composition(poset_spec));
            else
                throw std::invalid_argument("poset export: unknown kind \"" + poset_kind +
                                            "\" (expected young or comp)");
            if (fmt == OutputFormat::json)
                detail::emit_json(os, poset_to_json(P));
            else
                poset_to_text(os, P);
        } else if (*decide) {
            GradedPoset P = *decide_rect
                                ? build_K(rect_composition(Rectangle{mcd_k, mcd_l}))
                                : build_K(parse_composition(mcd_kappa));
            std::optional<int> rank;
            if (rank_opt->count()) {
                if (decide_rank < 0 || decide_rank > P.max_rank())
                    throw std::invalid_argument("mcd decide: rank " + std::to_string(decide_rank) +
                                                " out of range [0," +
                                                std::to_string(P.max_rank()) + "]");
                rank = decide_rank;
            }
            detail::decide_output(os, fmt, P, rank);
        } else if (*sagan) {
            no_csv("mcd sagan");
            if (sagan_k < 1) throw std::invalid_argument("mcd sagan: K must be >= 1");
            detail::sagan_output(os, fmt, sagan_k, sagan_report);
        } else if (*scan) {
            detail::scan_output(os, fmt, scan_kmax, scan_lmax);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace boxrank::cli
