#pragma once

#include <string>
#include <vector>

#include "arcsid/identities.hpp"

namespace arcsid {

// Every built-in identity written in the identity language, keyed by registry
// id and form. Used to cross-check the evaluator against the hand-coded
// checkers: the two implementations share no code path above raw arithmetic.
struct CorpusEntry {
    std::string name;      // registry id, with ".printed"/".corrected" suffix when dual
    std::string identity;  // registry id
    Form form;             // Form::none for single-form identities
    std::string text;
};

inline const std::vector<CorpusEntry>& dsl_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"thm2.1", "thm2.1", Form::none,
         "sum(k=0..n, binom(2*k,k)/(2*k+1) * binom(2*(n-k), n-k)) == "
         "16^n / ((2*n+1) * binom(2*n,n))"},

        {"thm3.1a", "thm3.1a", Form::none,
         "sum(k=0..n, binom(2*k,k) / "
         "(2^(4*k)*(2*k+1)*(n-k+1)^2*binom(2*(n-k+1), n-k+1))) == "
         "3*dfact(2*n+1)^2 / (2^(2*n+3)*fact(2*n+3)) * (pi2 - 2*trigamma_half(n+1))"},

        {"thm3.1b", "thm3.1b", Form::none,
         "sum(k=0..n, binom(2*k,k) / "
         "(2^(4*k)*(n-k+1)^2*binom(2*(n-k+1), n-k+1))) == "
         "dfact(2*n+1)^2 / (2^(2*n+3)*fact(2*n+2)) * (pi2 - 2*trigamma_half(n+1))"},

        {"thm3.1c", "thm3.1c", Form::none,
         "sum(k=0..n, binom(2*k,k) / "
         "(2^(4*k)*(2*k+1)*(n-k+1)*binom(2*(n-k+1), n-k+1))) == "
         "dfact(2*n+1)^2 / (2^(2*n+3)*fact(2*n+2)) * (pi2 - 2*trigamma_half(n+1))"},

        {"raw3.1.printed", "raw3.1", Form::printed,
         "6*dfact(2*n+1)^2/fact(2*n+3) * sum(k=0..n, 1/(2*k+1)^2) == "
         "sum(k=0..n, 2^(2*(n-2*k)-1) * binom(2*k,k) / "
         "((2*k+1)*(n-k+1)^2*binom(2*(n-k+1), n-k+1)))"},

        {"raw3.1.corrected", "raw3.1", Form::corrected,
         "6*dfact(2*n+1)^2/fact(2*n+3) * sum(k=0..n, 1/(2*k+1)^2) == "
         "sum(k=0..n, 2^(2*(n-2*k)+1) * binom(2*k,k) / "
         "((2*k+1)*(n-k+1)^2*binom(2*(n-k+1), n-k+1)))"},

        {"raw3.2.printed", "raw3.2", Form::printed,
         "2*dfact(2*n+1)^2/fact(2*n+2) * sum(k=0..n, 1/(2*k+1)^2) == "
         "sum(k=0..n, 2^(2*(n-2*k)+1) * binom(2*k,k) / "
         "((n-k+1)^2*binom(2*(n-k+1), n-k+1)))"},

        // This display is correct as printed, so its corrected form is the
        // same text; keeping the entry exercises the corrected code path.
        {"raw3.2.corrected", "raw3.2", Form::corrected,
         "2*dfact(2*n+1)^2/fact(2*n+2) * sum(k=0..n, 1/(2*k+1)^2) == "
         "sum(k=0..n, 2^(2*(n-2*k)+1) * binom(2*k,k) / "
         "((n-k+1)^2*binom(2*(n-k+1), n-k+1)))"},

        {"raw3.3.printed", "raw3.3", Form::printed,
         "2*dfact(2*n+1)^2/fact(2*n+2) * sum(k=0..n, 1/(2*k+1)^2) == "
         "sum(k=0..n, 2^(2*(n-2*k)+1) * binom(2*k,k) / "
         "((2*k+1)*(n-k+1)*binom(2*(n-k+1), n-k+1)))"},

        {"raw3.3.corrected", "raw3.3", Form::corrected,
         "2*dfact(2*n+1)^2/fact(2*n+2) * sum(k=0..n, 1/(2*k+1)^2) == "
         "sum(k=0..n, 2^(2*(n-2*k)+1) * binom(2*k,k) / "
         "((2*k+1)*(n-k+1)*binom(2*(n-k+1), n-k+1)))"},

        {"monthly_final", "monthly_final", Form::none,
         "sum(k=0..n, binom(2*k,k)*binom(2*(n-k), n-k)/(k+1)) == binom(2*n+1, n)"},

        {"monthly", "monthly", Form::none,
         "sum(k=0..n, binom(2*k,k)*binom(2*(n-k+1), n-k+1)/(k+1)) == "
         "2*binom(2*n+2, n)"},

        {"alzer_nagy", "alzer_nagy", Form::none,
         "sum(k=0..n, binom(2*k,k)*catalan(n-k)) == binom(2*(n+1), n+1)/2"},

        {"equivalence_step", "equivalence_step", Form::none,
         "2*binom(2*n+2, n) + binom(2*(n+1), n+1)/(n+2) == binom(2*n+3, n+1)"},

        {"catalan_rw1", "catalan_rw1", Form::printed,
         "sum(k=0..n, (n-k+1)*catalan(k)*catalan(n-k)) == binom(2*n+1, n)"},

        {"catalan_rw2", "catalan_rw2", Form::printed,
         "sum(k=0..n, (k+1)*(n-k+1)/(2*k+1) * catalan(k)*catalan(n-k)) == "
         "16^n / ((2*n+1)*(n+1)*catalan(n))"},

        {"catalan_rw3.printed", "catalan_rw3", Form::printed,
         "sum(k=0..n, (n-k+2)*catalan(k) / "
         "(2^(4*k)*(k+1)*(2*k+1)*(n-k+1)^2*catalan(n-k+1))) == "
         "3*dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+3)) * sum(k=0..n, 1/(2*k+1)^2)"},

        {"catalan_rw3.corrected", "catalan_rw3", Form::corrected,
         "sum(k=0..n, (k+1)*catalan(k) / "
         "(2^(4*k)*(2*k+1)*(n-k+1)^2*(n-k+2)*catalan(n-k+1))) == "
         "3*dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+3)) * sum(k=0..n, 1/(2*k+1)^2)"},

        {"catalan_rw4.printed", "catalan_rw4", Form::printed,
         "sum(k=0..n, (n-k+2)*catalan(k) / "
         "(2^(4*k)*(k+1)*(n-k+1)^2*catalan(n-k+1))) == "
         "dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+2)) * sum(k=0..n, 1/(2*k+1)^2)"},

        {"catalan_rw4.corrected", "catalan_rw4", Form::corrected,
         "sum(k=0..n, (k+1)*catalan(k) / "
         "(2^(4*k)*(n-k+1)^2*(n-k+2)*catalan(n-k+1))) == "
         "dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+2)) * sum(k=0..n, 1/(2*k+1)^2)"},

        {"catalan_rw5.printed", "catalan_rw5", Form::printed,
         "sum(k=0..n, (n-k+2)*catalan(k) / "
         "(2^(4*k)*(k+1)*(2*k+1)*(n-k+1)*catalan(n-k+1))) == "
         "dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+2)) * sum(k=0..n, 1/(2*k+1)^2)"},

        {"catalan_rw5.corrected", "catalan_rw5", Form::corrected,
         "sum(k=0..n, (k+1)*catalan(k) / "
         "(2^(4*k)*(2*k+1)*(n-k+1)*(n-k+2)*catalan(n-k+1))) == "
         "dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+2)) * sum(k=0..n, 1/(2*k+1)^2)"},
    };
    return corpus;
}

}  // namespace arcsid
