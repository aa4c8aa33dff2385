// Quick tour: rank sequences for a box, a failing log-concavity check, the
// Stanton non-unimodal ideal, and a modal-rank decision.

#include <boxrank/genfun.hpp>
#include <boxrank/io.hpp>
#include <boxrank/mcd.hpp>

#include <iostream>

using namespace boxrank;

namespace {

void print_seq(const char* label, const Poly& p) {
    std::cout << label << ':';
    for (int i = 0; i <= p.degree(); ++i) std::cout << ' ' << to_string(p.coeff(i));
    const SequenceProfile pr = profile(p);
    std::cout << "  (unimodal=" << (pr.unimodal ? "yes" : "no")
              << ", log_concave=" << (pr.log_concave ? "yes" : "no")
              << ", symmetric=" << (pr.symmetric ? "yes" : "no") << ")\n";
}

}  // namespace

int main() {
    print_seq("partitions in 3x3", p_rect(3, 3));
    print_seq("compositions in 3x3", f_rect(3, 3));
    print_seq("compositions below (3,1,4,1)", f_ideal(parse_composition("3,1,4,1")));

    const GradedPoset stanton = build_Y(parse_partition("8,8,4,4"));
    print_seq("Y(8,8,4,4) ranks", Poly::from_counts(rank_sequence(stanton)));

    const GradedPoset P = build_K(parse_composition("2,2,2,2"));
    std::cout << "feasible modal ranks of K(2^4):";
    for (int m : modal_ranks(P)) std::cout << ' ' << m;
    std::cout << " (predicted " << predicted_modal_rank(4, 2) << ")\n";
    return 0;
}
