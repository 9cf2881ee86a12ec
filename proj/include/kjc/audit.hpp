#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kjc/config.hpp"

namespace kjc {

// Least-squares fit of the identity-term coefficient C in C*(2N+1)*1 that
// makes the numeric block spectrum reproduce the closed-form deformed
// energies, against the three quoted candidates.
struct IdentityFitReport {
    double c_fit = 0.0;
    double c_consistent = 0.0;          // -2 m c^2 eps xi
    double c_printed_hamiltonian = 0.0; // +2 m c^2 eps xi
    double c_printed_hermitian = 0.0;   // +1 m c^2 eps xi
    double rel_err_vs_consistent = 0.0;
    std::string verdict; // "consistent" iff c_fit matches c_consistent to 1%
};

// Interior-masked projection of [h, Jz] onto the sigma^- a^- + sigma^+ a^+
// pattern; the quoted coefficient is 4 eps hbar g, the one that follows from
// the derived cross terms is 4 eps hbar^2 g.
struct CommutatorReport {
    double overlap = 0.0;
    Complex measured_coefficient{0.0, 0.0};
    Complex printed_coefficient{0.0, 0.0};
    Complex derived_coefficient{0.0, 0.0};
    double ratio_vs_printed = 0.0;
};

// Max deviation of the quoted coherent-state series from the numeric ground
// truth over the default grid, for one factorial reading.
struct SeriesDeviationReport {
    FactorialReading reading = FactorialReading::NFact;
    double max_dev_sz = 0.0;
    double max_dev_lz = 0.0;
    double max_dev_jz = 0.0;
};

// Coefficients of the numeric Hermitian counterpart along mutually orthogonal
// operator patterns (interior-masked): the coupling block, the sigma_z block,
// the epsilon cross block, and the (2N+1)*1 shift.
struct PatternProjectionReport {
    Complex jc_coupling{0.0, 0.0};
    Complex jc_coupling_expected{0.0, 0.0}; // hbar g
    double sigma_z = 0.0;
    double sigma_z_expected = 0.0; // delta_eps
    Complex cross_coupling{0.0, 0.0};
    Complex cross_derived{0.0, 0.0}; // 2 eps hbar g
    Complex cross_printed{0.0, 0.0}; // eps hbar g
    double identity_shift = 0.0;
    double unexplained_residual = 0.0; // relative, after removing all four
};

// Quoted transformed eigenstates vs the exact similarity-transformed ones.
struct EigenstateDeltaReport {
    double min_fidelity = 0.0;
    double max_coeff_delta = 0.0;
    int n_lo = 0;
    int n_hi = 0;
};

struct AuditReport {
    ModelParams params;
    int n_max = 0;
    int margin = 0;
    std::uint64_t seed = 0;
    IdentityFitReport identity;
    CommutatorReport commutator;
    std::vector<SeriesDeviationReport> series; // both factorial readings
    PatternProjectionReport patterns;
    EigenstateDeltaReport eigenstates;
    double expectation_equiv_max_rel = 0.0; // over 100 seeded random states
};

AuditReport run_audit(const RunConfig& cfg);

std::string audit_to_json(const AuditReport& r);

} // namespace kjc
