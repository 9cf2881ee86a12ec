#pragma once

#include <string>
#include <vector>

#include "kjc/basis.hpp"

namespace kjc {

enum class SpinSymbol { Identity, Z, Plus, Minus };
enum class LadderSymbol { Raise, Lower, Number };

// One normal-ordered term: coeff * spin * (a+)^j (a-)^k on the mode tagged by
// chirality (+1 or -1). Arbitrary ladder words are expanded into this form by
// TermSum::add_word, using a- a+ = a+ a- + 1.
struct Term {
    Complex coeff;
    SpinSymbol spin = SpinSymbol::Identity;
    int j = 0;
    int k = 0;
    int chirality = +1;
};

struct TermSum {
    std::vector<Term> terms;

    void add(const Term& t) { terms.push_back(t); }
    void add(Complex coeff, SpinSymbol spin, int j, int k, int chirality = +1) {
        terms.push_back({coeff, spin, j, k, chirality});
    }
    // Expand a left-to-right ladder word into normal-ordered terms.
    void add_word(Complex coeff, SpinSymbol spin, const std::vector<LadderSymbol>& word,
                  int chirality = +1);
};

// Unique form: normal-ordered, terms sorted, duplicates merged, coefficients
// below drop_tol removed.
TermSum canonicalize(const TermSum& ts, double drop_tol = 0.0);

// Canonical-form equality with 1e-12 absolute tolerance on coefficients.
bool term_sums_equal(const TermSum& a, const TermSum& b, double tol = 1e-12);

std::string to_string(const TermSum& ts);
std::string to_string(SpinSymbol s);

// Realization on the composite spin x single-mode basis; the chirality tag is
// bookkeeping only (Hamiltonians reference one mode at a time).
Matrix realize_composite(const TermSum& ts, int n_max);

// Realization on a two-mode model basis spin x mode(+1) x mode(-1); used to
// cross-check symmetry rewrites against explicit (anti)unitaries.
Matrix realize_two_mode(const TermSum& ts, int n_max);

} // namespace kjc
