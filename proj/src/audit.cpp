#include "kjc/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include <json.hpp>

#include "kjc/fock.hpp"
#include "kjc/metric.hpp"
#include "kjc/numerics.hpp"
#include "kjc/spectra.hpp"

namespace kjc {

namespace {

Matrix masked(const Matrix& m, const Eigen::VectorXd& mask) {
    const Vector cm = mask.cast<Complex>();
    return cm.asDiagonal() * m * cm.asDiagonal();
}

// Fit C over interior blocks: the numeric pair-sums of the identity-stripped
// Hamiltonian shift by 4C(n+Theta) per block, and the closed-form target pair
// sum is the mirror sum of the deformed energies.
IdentityFitReport identity_fit(const ModelParams& p, int n_max, int margin) {
    IdentityFitReport rep;
    const double mag = 2.0 * p.mc2() * p.epsilon * p.xi();
    rep.c_consistent = -mag;
    rep.c_printed_hamiltonian = mag;
    rep.c_printed_hermitian = 0.5 * mag;

    TermSum stripped;
    for (const Term& t : terms_kappa(p).terms)
        if (t.spin != SpinSymbol::Identity)
            stripped.add(t);
    const Matrix h0 = realize_composite(stripped, n_max);
    const CompositeBasis b(n_max);
    const bool plus = p.branch == Branch::Plus;
    const int interior_top = plus ? n_max - margin - 1 : n_max - margin;
    const int n_min = branch_n_min(p.branch);

    // Pair-sums per closed-form label n, classified by the eigenvector's
    // dominant basis component (both components of a block share the label).
    std::map<int, std::pair<double, int>> sums;
    for (const Eigenpair& ep : general_eigenpairs(h0)) {
        int arg = 0;
        ep.vector.cwiseAbs().maxCoeff(&arg);
        const int sigma = b.spin_of(arg);
        const int level = b.level_of(arg);
        int label = 0;
        if (plus) {
            // block = {|m,up>, |m+1,down>}, closed-form label n = m
            if (sigma == 1 && level == 0)
                continue; // lone chain-end state
            label = (sigma == 0) ? level : level - 1;
        } else {
            // block = {|m,down>, |m+1,up>}, closed-form label n = m+1
            if (sigma == 0 && level == 0)
                continue;
            label = (sigma == 1) ? level + 1 : level;
        }
        if (label < n_min || label > interior_top)
            continue;
        auto& [acc, cnt] = sums[label];
        acc += ep.value.real();
        ++cnt;
    }

    double num = 0.0, den = 0.0;
    for (const auto& [n, entry] : sums) {
        const auto& [sum_n, cnt] = entry;
        if (cnt != 2)
            continue;
        const double target = energy_deformed(n, +1, p) + energy_deformed(n, -1, p);
        const double w = 4.0 * (n + branch_theta(p.branch));
        num += (target - sum_n) * w;
        den += w * w;
    }
    rep.c_fit = den > 0.0 ? num / den : 0.0;
    const double scale = mag > 0.0 ? mag : 1.0; // eps = 0 degenerates to an absolute check
    rep.rel_err_vs_consistent = std::abs(rep.c_fit - rep.c_consistent) / scale;
    rep.verdict = rep.rel_err_vs_consistent <= 1e-2 ? "consistent" : "unresolved";
    return rep;
}

Matrix hermitian_counterpart(const ModelParams& p, int n_max) {
    const Matrix big_h = build_kappa(p, n_max);
    if (p.epsilon == 0.0)
        return big_h;
    const MetricBundle bundle = build_rho(p, n_max);
    Matrix h = hermitize(big_h, bundle);
    return 0.5 * (h + Matrix(h.adjoint()));
}

CommutatorReport commutator_report(const ModelParams& p, int n_max, int margin) {
    CommutatorReport rep;
    const Complex g = p.coupling_g();
    rep.printed_coefficient = 4.0 * p.epsilon * p.hbar * g;
    rep.derived_coefficient = 4.0 * p.epsilon * p.hbar * p.hbar * g;

    const Matrix h = hermitian_counterpart(p, n_max);
    const Matrix jz = jz_operator(p, n_max);
    const Matrix comm = h * jz - jz * h;

    TermSum pat;
    pat.add(Complex(1.0, 0.0), SpinSymbol::Minus, 0, 1, p.s); // sigma^- a^-
    pat.add(Complex(1.0, 0.0), SpinSymbol::Plus, 1, 0, p.s);  // sigma^+ a^+
    const Matrix pattern = realize_composite(pat, n_max);

    const Eigen::VectorXd mask = CompositeBasis(n_max).interior_mask(margin);
    const Matrix comm_int = masked(comm, mask);
    const Matrix pat_int = masked(pattern, mask);

    const double pat_norm = std::sqrt(frobenius_inner(pat_int, pat_int).real());
    const double comm_norm = std::sqrt(frobenius_inner(comm_int, comm_int).real());
    const Complex inner = frobenius_inner(pat_int, comm_int);
    rep.overlap = (pat_norm > 0.0 && comm_norm > 0.0)
                      ? std::abs(inner) / (pat_norm * comm_norm)
                      : 0.0;
    rep.measured_coefficient =
        pat_norm > 0.0 ? inner / Complex(pat_norm * pat_norm, 0.0) : Complex(0.0, 0.0);
    rep.ratio_vs_printed = std::abs(rep.printed_coefficient) > 0.0
                               ? std::abs(rep.measured_coefficient) /
                                     std::abs(rep.printed_coefficient)
                               : 0.0;
    return rep;
}

PatternProjectionReport pattern_projections(const ModelParams& p, int n_max, int margin) {
    PatternProjectionReport rep;
    const Complex g = p.coupling_g();
    rep.jc_coupling_expected = p.hbar * g;
    rep.sigma_z_expected = p.delta_eps();
    rep.cross_derived = 2.0 * p.epsilon * p.hbar * g;
    rep.cross_printed = p.epsilon * p.hbar * g;

    const Matrix h = hermitian_counterpart(p, n_max);
    const Eigen::VectorXd mask = CompositeBasis(n_max).interior_mask(margin);
    const Matrix h_int = masked(h, mask);

    auto realize_one = [&](SpinSymbol spin, int j, int k) {
        TermSum one;
        one.add(Complex(1.0, 0.0), spin, j, k, p.s);
        return realize_composite(one, n_max);
    };
    // Branch-dependent coupling block: a+ sigma^- on the excitation-conserving
    // branch, a+ sigma^+ on the other.
    const bool plus = p.branch == Branch::Plus;
    const Matrix p_coup = realize_one(plus ? SpinSymbol::Minus : SpinSymbol::Plus, 1, 0);
    const Matrix p_sz = realize_one(SpinSymbol::Z, 0, 0);
    const Matrix p_cross = realize_one(plus ? SpinSymbol::Minus : SpinSymbol::Plus, 0, 1);
    TermSum shift; // (2N + 1) * identity-spin
    shift.add(Complex(2.0, 0.0), SpinSymbol::Identity, 1, 1, p.s);
    shift.add(Complex(1.0, 0.0), SpinSymbol::Identity, 0, 0, p.s);
    const Matrix p_shift = realize_composite(shift, n_max);

    auto project = [&](const Matrix& pattern) {
        const Matrix pat_int = masked(pattern, mask);
        const double den = frobenius_inner(pat_int, pat_int).real();
        return frobenius_inner(pat_int, h_int) / Complex(den, 0.0);
    };
    rep.jc_coupling = project(p_coup);
    rep.sigma_z = project(p_sz).real();
    rep.cross_coupling = project(p_cross);
    rep.identity_shift = project(p_shift).real();

    Matrix recon = rep.jc_coupling * p_coup + std::conj(rep.jc_coupling) * p_coup.adjoint() +
                   Complex(rep.sigma_z, 0.0) * p_sz + rep.cross_coupling * p_cross +
                   std::conj(rep.cross_coupling) * p_cross.adjoint() +
                   Complex(rep.identity_shift, 0.0) * p_shift;
    const Matrix diff = masked(h - recon, mask);
    const double h_norm = std::sqrt(frobenius_inner(h_int, h_int).real());
    rep.unexplained_residual =
        h_norm > 0.0 ? std::sqrt(frobenius_inner(diff, diff).real()) / h_norm : 0.0;
    return rep;
}

EigenstateDeltaReport eigenstate_deltas(const ModelParams& p, int n_max) {
    EigenstateDeltaReport rep;
    rep.n_lo = 2;
    rep.n_hi = 6;
    rep.min_fidelity = 1.0;
    rep.max_coeff_delta = 0.0;

    const Matrix h = hermitian_counterpart(p, n_max);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Eigen::VectorXd evals = es.eigenvalues();
    const Matrix evecs = es.eigenvectors();

    for (int n = rep.n_lo; n <= rep.n_hi; ++n) {
        const double target = energy_deformed(n, +1, p);
        int best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < evals.size(); ++j) {
            const double d = std::abs(evals(j) - target);
            if (d < best_dist) {
                best_dist = d;
                best = static_cast<int>(j);
            }
        }
        const Vector v = evecs.col(best);
        Vector u = eigvec_closed_h(n, +1, p, n_max);
        u /= u.norm();
        const Complex o = v.adjoint() * u;
        const double fid = std::norm(o);
        rep.min_fidelity = std::min(rep.min_fidelity, fid);
        if (std::abs(o) > 0.0) {
            const Vector aligned = u * (std::conj(o) / std::abs(o));
            rep.max_coeff_delta =
                std::max(rep.max_coeff_delta, (aligned - v).cwiseAbs().maxCoeff());
        }
    }
    return rep;
}

double expectation_equiv_scan(const ModelParams& p, int n_max, std::uint64_t seed) {
    const Matrix big_h = build_kappa(p, n_max);
    const MetricBundle bundle = build_rho(p, n_max);
    const CompositeBasis b(n_max);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        Vector phi(b.dim());
        for (int k = 0; k < b.dim(); ++k)
            phi(k) = Complex(gauss(rng), gauss(rng));
        phi /= phi.norm();
        const auto [lhs, rhs] = expectation_equiv(big_h, bundle, phi);
        const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
        worst = std::max(worst, rel);
    }
    return worst;
}

nlohmann::json complex_json(Complex z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

} // namespace

AuditReport run_audit(const RunConfig& cfg) {
    cfg.validate();
    const ModelParams& p = cfg.params;
    AuditReport rep;
    rep.params = p;
    rep.n_max = cfg.n_max;
    rep.margin = cfg.margin;
    rep.seed = cfg.seed;

    rep.identity = identity_fit(p, cfg.n_max, cfg.margin);
    rep.commutator = commutator_report(p, cfg.n_max, cfg.margin);
    rep.patterns = pattern_projections(p, cfg.n_max, cfg.margin);
    rep.eigenstates = eigenstate_deltas(p, cfg.n_max);
    rep.expectation_equiv_max_rel = expectation_equiv_scan(p, cfg.n_max, cfg.seed);

    // Series-vs-numeric deviations need a coherent initial state; fall back to
    // the stock mean when the config asked for a Fock run.
    InitialState init = cfg.initial;
    if (init.kind != InitialState::Kind::Coherent)
        init = InitialState{InitialState::Kind::Coherent, 0, 25.0};
    RunConfig series_cfg = cfg;
    series_cfg.initial = init;
    const std::vector<double> grid = series_cfg.time_grid();
    const TimeSeries truth = simulate(p, init, grid, Method::Numeric, cfg.n_max);
    for (FactorialReading reading :
         {FactorialReading::NFact, FactorialReading::NPlusOneFact}) {
        const TimeSeries series =
            simulate(p, init, grid, Method::PrintedSeries, cfg.n_max, reading);
        SeriesDeviationReport dev;
        dev.reading = reading;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            dev.max_dev_sz = std::max(dev.max_dev_sz, std::abs(series.sz[i] - truth.sz[i]));
            dev.max_dev_lz = std::max(dev.max_dev_lz, std::abs(series.lz[i] - truth.lz[i]));
            dev.max_dev_jz = std::max(dev.max_dev_jz, std::abs(series.jz[i] - truth.jz[i]));
        }
        rep.series.push_back(dev);
    }
    return rep;
}

std::string audit_to_json(const AuditReport& r) {
    nlohmann::json j;
    j["parameters"] = {{"mass", r.params.mass},
                       {"c", r.params.c},
                       {"hbar", r.params.hbar},
                       {"omega", r.params.omega},
                       {"epsilon", r.params.epsilon},
                       {"s", r.params.s},
                       {"branch", to_string(r.params.branch)},
                       {"convention", to_string(r.params.convention)},
                       {"n_max", r.n_max},
                       {"margin", r.margin},
                       {"seed", r.seed}};
    j["identity_coefficient"] = {{"fit", r.identity.c_fit},
                                 {"spectrum_consistent", r.identity.c_consistent},
                                 {"quoted_hamiltonian", r.identity.c_printed_hamiltonian},
                                 {"quoted_hermitian_display", r.identity.c_printed_hermitian},
                                 {"rel_err_vs_consistent", r.identity.rel_err_vs_consistent},
                                 {"verdict", r.identity.verdict}};
    j["jz_commutator"] = {{"pattern_overlap", r.commutator.overlap},
                          {"measured", complex_json(r.commutator.measured_coefficient)},
                          {"quoted", complex_json(r.commutator.printed_coefficient)},
                          {"derived", complex_json(r.commutator.derived_coefficient)},
                          {"ratio_vs_quoted", r.commutator.ratio_vs_printed}};
    j["series_vs_numeric"] = nlohmann::json::array();
    for (const auto& dev : r.series)
        j["series_vs_numeric"].push_back({{"factorial_reading", to_string(dev.reading)},
                                          {"max_dev_sz", dev.max_dev_sz},
                                          {"max_dev_lz", dev.max_dev_lz},
                                          {"max_dev_jz", dev.max_dev_jz}});
    j["hermitian_patterns"] = {
        {"coupling", complex_json(r.patterns.jc_coupling)},
        {"coupling_expected", complex_json(r.patterns.jc_coupling_expected)},
        {"sigma_z", r.patterns.sigma_z},
        {"sigma_z_expected", r.patterns.sigma_z_expected},
        {"cross", complex_json(r.patterns.cross_coupling)},
        {"cross_derived", complex_json(r.patterns.cross_derived)},
        {"cross_quoted", complex_json(r.patterns.cross_printed)},
        {"identity_shift", r.patterns.identity_shift},
        {"unexplained_residual", r.patterns.unexplained_residual}};
    j["transformed_eigenstates"] = {{"n_lo", r.eigenstates.n_lo},
                                    {"n_hi", r.eigenstates.n_hi},
                                    {"min_fidelity", r.eigenstates.min_fidelity},
                                    {"max_coeff_delta", r.eigenstates.max_coeff_delta}};
    j["expectation_equivalence_max_rel"] = r.expectation_equiv_max_rel;
    return j.dump(2) + "\n";
}

} // namespace kjc
