#pragma once

#include <array>
#include <string>

#include "kjc/models.hpp"

namespace kjc {

// Image of one spin symbol under a rule: target symbol times a real sign.
struct SpinImage {
    SpinSymbol symbol;
    double sign;
};

// A discrete-symmetry rewrite: per-symbol spin images, a common ladder action
// (a+- -> ladder_sign * a+- with optional chirality flip; N follows as the
// square), and an antiunitary flag that conjugates every coefficient.
struct TransformRule {
    std::string name;
    bool antiunitary = false;
    std::array<SpinImage, 4> spin; // indexed by SpinSymbol order: 1, sz, s+, s-
    double ladder_sign = 1.0;
    bool flip_chirality = false;
};

// The five named rules.
//
// P and T follow the quoted transformation table verbatim (P: a_s -> a_{-s};
// T antiunitary: a_s -> -a_s, sz -> -sz, s+- -> s-+), and PT is their literal
// composition. The composite rules P_sigma_z and T_sigma_x carry the ladder
// actions that realize the quoted outcomes "invariant under P sigma_z" and
// "T sigma_x flips the chirality": point-reflection parity (a -> -a, label
// kept) joined with the sigma_z sandwich, and antiunitary time reversal on
// chiral modes (a_s -> -a_{-s}) joined with the sigma_x sandwich. Composing
// the table rows literally instead fails both outcomes (the sigma_z sandwich
// sign on the couplings never cancels, and nothing flips the label under T);
// audit_symmetries reports those literal verdicts as well.
TransformRule rule_P();
TransformRule rule_T();
TransformRule rule_PT();
TransformRule rule_P_sigma_z();
TransformRule rule_T_sigma_x();

TermSum transform(const TermSum& ts, const TransformRule& rule);

// Matrix realization of the rule's unitary part on the two-chirality block
// model (spin x mode(+1) x mode(-1)); for antiunitary rules the action on a
// matrix M is U conj(M) U^-1. Used to cross-check the rewrite engine.
Matrix rule_unitary(const TransformRule& rule, int n_max);

struct SymmetryReport {
    bool pt_invariant = false;
    bool p_sigma_z_invariant = false;
    bool t_sigma_x_flips_chirality = false;
    // What the literal row-by-row compositions of the quoted table would give;
    // recorded because they contradict the quoted outcomes.
    bool literal_p_sigma_z_invariant = false;
    bool literal_t_sigma_x_flips_chirality = false;
    std::string h_terms;
    std::string pt_terms;
    std::string p_sigma_z_terms;
    std::string t_sigma_x_terms;
    std::string note;
};

SymmetryReport audit_symmetries(const ModelParams& p);

// Test hook: run the audit with replacement rules for the three checks.
SymmetryReport audit_symmetries_with_rules(const ModelParams& p, const TransformRule& pt,
                                           const TransformRule& p_sigma_z,
                                           const TransformRule& t_sigma_x);

} // namespace kjc
