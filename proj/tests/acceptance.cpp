// Acceptance gate: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code 0 only if all criteria hold.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kjc/audit.hpp"
#include "kjc/config.hpp"
#include "kjc/dynamics.hpp"
#include "kjc/metric.hpp"
#include "kjc/models.hpp"
#include "kjc/numerics.hpp"
#include "kjc/spectra.hpp"
#include "kjc/symmetry.hpp"

using namespace kjc;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s - %2d. %s (%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!ok)
        ++g_failures;
}

ModelParams unit_params(double epsilon, Branch b = Branch::Plus) {
    ModelParams p;
    p.epsilon = epsilon;
    p.branch = b;
    return p;
}

Matrix hermitized(const ModelParams& p, int n_max) {
    const Matrix h = build_kappa(p, n_max);
    if (p.epsilon == 0.0)
        return h;
    const Matrix ht = hermitize(h, build_rho(p, n_max));
    return 0.5 * (ht + Matrix(ht.adjoint()));
}

double fidelity(const Vector& a, const Vector& b) {
    const double den = a.squaredNorm() * b.squaredNorm();
    return std::norm(a.dot(b)) / den;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1_undeformed_reduction() {
    bool ok = true;
    std::ostringstream detail;
    for (Branch b : {Branch::Plus, Branch::Minus}) {
        const ModelParams p = unit_params(0.0, b);
        const Matrix undeformed = b == Branch::Plus ? build_jc(p, 60) : build_ajc(p, 60);
        const double diff = (build_kappa(p, 60) - undeformed).norm();
        ok = ok && diff == 0.0;
        const SpectralReport rep = numeric_vs_closed(build_kappa(p, 60), p, 10);
        ok = ok && rep.max_abs_err <= 1e-10 && rep.max_imag <= 1e-10;
        detail << to_string(b) << " diff=" << diff << " err=" << fmt(rep.max_abs_err)
               << " ";
    }
    report(1, "deformed model reduces exactly to the undeformed ones at eps=0", ok,
           detail.str());
}

void criterion_2_deformed_spectrum() {
    bool ok = true;
    double worst_rel = 0.0;
    double worst_imag = 0.0;
    for (double xi : {0.25, 0.5, 1.0, 2.0}) {
        for (double eps : {2.5e-4, 5e-4, 1e-3}) {
            for (Branch b : {Branch::Plus, Branch::Minus}) {
                ModelParams p = unit_params(eps, b);
                p.omega = xi; // m = c = hbar = 1
                const Matrix h = build_kappa(p, 100);
                const SpectralReport rep = numeric_vs_closed(h, p, 10);
                const double bound = 50.0 * eps * eps * p.mc2();
                worst_rel = std::max(worst_rel, rep.max_abs_err / bound);
                worst_imag = std::max(worst_imag, rep.max_imag);
                ok = ok && rep.max_abs_err <= bound && rep.max_imag <= 1e-10;
            }
        }
    }
    report(2, "deformed spectra match the closed forms across the xi/eps sweep", ok,
           "worst err/bound=" + fmt(worst_rel) + " worst |Im|=" + fmt(worst_imag));
}

void criterion_3_mirror_sum() {
    const ModelParams p = unit_params(5e-4);
    bool ok = true;
    double worst_closed = 0.0;
    for (int n = 0; n < 90; ++n) {
        const double sum = energy_deformed(n, +1, p) + energy_deformed(n, -1, p);
        worst_closed = std::max(worst_closed, std::abs(sum + 2.0 * deformation_gap(n, p)));
    }
    ok = ok && worst_closed <= 1e-12;

    const SpectralReport rep = numeric_vs_closed(build_kappa(p, 60), p, 10);
    std::map<int, std::map<int, double>> towers;
    for (const auto& row : rep.rows)
        if (row.n >= 0)
            towers[row.n][row.sign] = row.e_numeric.real();
    double worst_numeric = 0.0;
    int pairs = 0;
    for (const auto& [n, by_sign] : towers) {
        if (by_sign.size() != 2)
            continue;
        ++pairs;
        const double sum = by_sign.at(+1) + by_sign.at(-1);
        worst_numeric = std::max(worst_numeric, std::abs(sum + 2.0 * deformation_gap(n, p)));
    }
    ok = ok && pairs > 30 && worst_numeric <= 1e-8;
    report(3, "mirror towers shift together by the closed-form asymmetry", ok,
           "closed=" + fmt(worst_closed) + " numeric=" + fmt(worst_numeric) +
               " pairs=" + std::to_string(pairs));
}

void criterion_4_level_curves() {
    const ModelParams p = unit_params(5e-4);
    const auto rows = fig1_data(p, default_fig1_levels(Branch::Plus), default_xi_grid());
    bool ok = rows.size() == 5 * 201;
    double worst_gap = 0.0;
    for (const auto& r : rows) {
        // The gap column is the exact closed-form product and the deformed
        // curves are exactly the undeformed ones minus that column.
        worst_gap = std::max(
            worst_gap,
            std::abs(r.gap - 4.0 * p.mc2() * r.xi * p.epsilon * double(r.n + 1)));
        worst_gap = std::max(worst_gap, std::abs(r.e_plus_deformed - (r.e_plus - r.gap)));
        worst_gap = std::max(worst_gap, std::abs(r.e_minus_deformed - (r.e_minus - r.gap)));
    }
    ok = ok && worst_gap == 0.0;

    // Same numbers as the direct closed-form energies.
    ModelParams q = p;
    q.omega = 0.37;
    double worst_cross = 0.0;
    for (const auto& r : rows)
        if (r.xi == 0.37)
            worst_cross = std::max(
                worst_cross, std::abs(r.e_plus_deformed - energy_deformed(r.n, +1, q)));
    ok = ok && worst_cross < 1e-12;

    // Monotone ordering: curves rise with n at fixed xi and never cross
    // (all of them coincide at the rest energy when xi = 0).
    const size_t stride = 201;
    for (size_t k = 1; k < 5; ++k)
        for (size_t i = 0; i < stride; ++i) {
            const auto& lo = rows[(k - 1) * stride + i];
            const auto& hi = rows[k * stride + i];
            ok = ok && hi.e_plus_deformed >= lo.e_plus_deformed;
            ok = ok && (i == 0 ? hi.e_plus == lo.e_plus : hi.e_plus > lo.e_plus);
        }
    report(4, "level-curve table reproduces the exact deformation gap", ok,
           "gap dev=" + fmt(worst_gap) + " cross dev=" + fmt(worst_cross));
}

void criterion_5_metric_balance() {
    bool ok = true;
    std::ostringstream detail;
    for (Branch b : {Branch::Plus, Branch::Minus}) {
        const ModelParams p1 = unit_params(5e-4, b);
        const ModelParams p2 = unit_params(1e-3, b);
        const MetricBundle m1 = build_rho(p1, 60);
        const double r1 = quasi_residual(build_kappa(p1, 60), m1, 10);
        const double r2 = quasi_residual(build_kappa(p2, 60), build_rho(p2, 60), 10);
        const double ratio = r2 / r1;
        ok = ok && r1 <= 1e-5 && ratio >= 3.2 && ratio <= 4.8 && m1.min_eta_eigenvalue > 0.9;
        if (b == Branch::Plus)
            detail << "residual=" << fmt(r1) << " ratio=" << fmt(ratio)
                   << " min_eta=" << fmt(m1.min_eta_eigenvalue);
    }
    report(5, "metric balances the deformed model and scales as eps^2", ok, detail.str());
}

void criterion_6_hermitization() {
    const int n_max = 60;
    const int margin = 10;
    const ModelParams p = unit_params(5e-4);
    const Matrix h = build_kappa(p, n_max);
    const MetricBundle bundle = build_rho(p, n_max);
    const Matrix ht = hermitize(h, bundle);

    const CompositeBasis basis(n_max);
    const Matrix cm = basis.interior_mask(margin).cast<Complex>().asDiagonal();
    const double herm = hermiticity_residual(Matrix(cm * ht * cm));

    const auto raw = general_eigenpairs(h);
    const auto sym = general_eigenpairs(ht);
    double spectrum_dev = 0.0;
    for (size_t k = 0; k < raw.size(); ++k)
        spectrum_dev = std::max(spectrum_dev, std::abs(raw[k].value.real() - sym[k].value.real()));

    std::mt19937_64 rng(20240915);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst_rel = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        Vector phi(basis.dim());
        for (int k = 0; k < basis.dim(); ++k)
            phi(k) = Complex(gauss(rng), gauss(rng));
        phi.normalize();
        const auto [lhs, rhs] = expectation_equiv(h, bundle, phi);
        worst_rel = std::max(worst_rel,
                             std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }

    const bool ok = herm <= 1e-5 && spectrum_dev <= 1e-9 && worst_rel <= 1e-10;
    report(6, "similarity transform hermitizes, preserves spectra and expectations", ok,
           "herm=" + fmt(herm) + " spectrum=" + fmt(spectrum_dev) + " expect=" + fmt(worst_rel));
}

void criterion_7_eigenstates() {
    const int n_max = 40;
    const ModelParams p = unit_params(5e-4);
    const Matrix h = build_kappa(p, n_max);
    const auto pairs = general_eigenpairs(h);
    double min_fid = 1.0;
    for (int n = 0; n <= 10; ++n) {
        for (int sign : {+1, -1}) {
            const double target = energy_deformed(n, sign, p);
            const Vector closed = eigvec_closed_H(n, sign, p, n_max);
            double best = std::numeric_limits<double>::infinity();
            const Eigenpair* hit = nullptr;
            for (const auto& pr : pairs)
                if (std::abs(pr.value.real() - target) < best) {
                    best = std::abs(pr.value.real() - target);
                    hit = &pr;
                }
            min_fid = std::min(min_fid, fidelity(closed, hit->vector));
        }
    }
    const bool ok = min_fid >= 1.0 - 1e-4;
    report(7, "quoted deformed eigenstates overlap the numeric eigenvectors", ok,
           "min fidelity=1-" + fmt(1.0 - min_fid));
}

void criterion_8_dynamics_identities() {
    const ModelParams p = unit_params(5e-4);
    std::mt19937_64 rng(20240915);
    std::uniform_real_distribution<double> tdist(0.0, 50.0);
    std::uniform_int_distribution<int> ndist(0, 40);
    double worst_circle = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const FGPair fg = fg_amplitudes(ndist(rng), tdist(rng), p);
        worst_circle =
            std::max(worst_circle, std::abs(std::norm(fg.f) + fg.g * fg.g - 1.0));
    }

    const int n_max = 30;
    const CompositeBasis basis(n_max);
    const Matrix h = hermitized(p, n_max);
    const SpectralPropagator prop(h, p.hbar);
    double min_fid = 1.0;
    double worst_norm = 0.0;
    double worst_energy = 0.0;
    for (int n = 0; n <= 10; ++n) {
        Vector psi0 = Vector::Zero(basis.dim());
        psi0(basis.index(0, n)) = 1.0;
        const auto coeffs = prop.coefficients(psi0);
        const double e0 = (psi0.adjoint() * h * psi0)(0).real();
        const double period = 2.0 * M_PI / zitter_frequencies(n, p).omega_n;
        for (int k = 1; k <= 48; ++k) {
            const double t = 3.0 * period * k / 48.0;
            const Vector numeric = prop.state_from(coeffs, t);
            min_fid = std::min(min_fid, fidelity(evolve_closed(n, t, p, n_max), numeric));
            worst_norm = std::max(worst_norm, std::abs(numeric.norm() - 1.0));
            const double et = (numeric.adjoint() * h * numeric)(0).real();
            worst_energy = std::max(worst_energy, std::abs(et - e0));
        }
    }
    const bool ok = worst_circle <= 1e-12 && min_fid >= 1.0 - 1e-3 &&
                    worst_norm <= 1e-10 && worst_energy <= 1e-9;
    report(8, "closed-form dynamics hold and the numeric propagator is unitary", ok,
           "circle=" + fmt(worst_circle) + " fid=1-" + fmt(1.0 - min_fid) +
               " norm=" + fmt(worst_norm) + " energy=" + fmt(worst_energy));
}

void criterion_9_fock_second_order() {
    InitialState fock;
    fock.kind = InitialState::Kind::Fock;
    fock.n = 5;
    const auto grid = linear_grid(3.0 * 2.0 * M_PI / 5.0, 400); // three Rabi periods
    const DeltaSeries d1 = run_delta(unit_params(5e-4), fock, grid, Method::Numeric, 24);
    const DeltaSeries d2 = run_delta(unit_params(1e-3), fock, grid, Method::Numeric, 24);
    auto max_abs = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v)
            m = std::max(m, std::abs(x));
        return m;
    };
    bool ok = true;
    std::ostringstream detail;
    const std::vector<std::pair<std::string, std::pair<double, double>>> obs = {
        {"Sz", {max_abs(d1.delta.sz), max_abs(d2.delta.sz)}},
        {"Lz", {max_abs(d1.delta.lz), max_abs(d2.delta.lz)}},
        {"Jz", {max_abs(d1.delta.jz), max_abs(d2.delta.jz)}},
    };
    for (const auto& [name, pair] : obs) {
        const double ratio = pair.second / pair.first;
        ok = ok && ratio >= 3.2 && ratio <= 4.8;
        detail << name << "=" << fmt(ratio) << " ";
    }
    report(9, "number-state responses to the deformation are second order", ok,
           "doubling ratios: " + detail.str());
}

void criterion_10_collapse_revival() {
    const int n_max = 100;
    InitialState coh;
    coh.kind = InitialState::Kind::Coherent;
    coh.mean = 25.0;
    const ModelParams p1 = unit_params(5e-4);
    const double t_rev = revival_time(p1, coh.mean);
    const auto grid = linear_grid(3.0 * t_rev, 3000);

    const DeltaSeries d1 = run_delta(p1, coh, grid, Method::Numeric, n_max);
    const TimeSeries& eps_run = d1.eps_run;
    const TimeSeries& zero_run = d1.zero_run;

    auto envelope = [&](const TimeSeries& ts, double lo, double hi) {
        double mn = 1e300;
        double mx = -1e300;
        for (size_t k = 0; k < ts.t.size(); ++k)
            if (ts.t[k] >= lo * t_rev && ts.t[k] <= hi * t_rev) {
                mn = std::min(mn, ts.sz[k]);
                mx = std::max(mx, ts.sz[k]);
            }
        return mx - mn;
    };
    // The spin series oscillates at twice the ladder frequencies, so its first
    // revival sits near half the single-frequency rephasing estimate t_rev.
    const double env0 = envelope(eps_run, 0.0, 0.1);
    const double env_collapse = envelope(eps_run, 0.15, 0.3);
    const double env_revival = envelope(eps_run, 0.4, 0.65);
    bool ok = env_collapse <= 0.1 * env0 && env_revival >= 0.4 * env0;

    double jz_drift = 0.0;
    for (double v : zero_run.jz)
        jz_drift = std::max(jz_drift, std::abs(v - 25.5));
    ok = ok && jz_drift <= 1e-8;

    auto window_mean = [&](const std::vector<double>& v, double lo, double hi) {
        double sum = 0.0;
        int count = 0;
        for (size_t k = 0; k < grid.size(); ++k)
            if (grid[k] >= lo && grid[k] <= hi) {
                sum += v[k];
                ++count;
            }
        return sum / std::max(1, count);
    };
    const double late1 = window_mean(d1.delta.jz, 2.0 * t_rev, 3.0 * t_rev);
    const double mid1 = window_mean(d1.delta.jz, 1.5 * t_rev, 2.0 * t_rev);
    ok = ok && std::abs(late1) >= 1.5e-2 && std::abs(late1) <= 1.5e-1;
    ok = ok && std::abs(late1 - mid1) <= 0.3 * std::abs(late1); // saturated

    const DeltaSeries d2 = run_delta(p1.with_epsilon(1e-3), coh, grid, Method::Numeric, n_max);
    const double late2 = window_mean(d2.delta.jz, 2.0 * t_rev, 3.0 * t_rev);
    const double eps_ratio = late2 / late1;
    ok = ok && eps_ratio >= 1.8 && eps_ratio <= 2.2;

    report(10, "coherent run collapses, revives, and drifts linearly in eps", ok,
           "collapse=" + fmt(env_collapse / env0) + " revival=" + fmt(env_revival / env0) +
               " jz0 drift=" + fmt(jz_drift) + " late dJz=" + fmt(late1) +
               " eps ratio=" + fmt(eps_ratio));
}

void criterion_11_symmetry_verdicts() {
    const SymmetryReport rep = audit_symmetries(unit_params(5e-4));
    bool ok = !rep.pt_invariant && rep.p_sigma_z_invariant && rep.t_sigma_x_flips_chirality;

    TermSum probe;
    probe.add(Complex(0.3, 0.7), SpinSymbol::Minus, 1, 0, +1);
    probe.add(Complex(0.2, -0.1), SpinSymbol::Plus, 0, 1, -1);
    probe.add(1.5, SpinSymbol::Z, 0, 0, +1);
    probe.add(Complex(0.0, 0.4), SpinSymbol::Identity, 1, 1, -1);
    for (const auto& rule :
         {rule_P(), rule_T(), rule_PT(), rule_P_sigma_z(), rule_T_sigma_x()})
        ok = ok && term_sums_equal(transform(transform(probe, rule), rule), probe, 1e-14);

    report(11, "discrete-symmetry verdicts and involutions hold", ok,
           std::string("pt=") + (rep.pt_invariant ? "yes" : "no") + " p_sz=" +
               (rep.p_sigma_z_invariant ? "yes" : "no") + " t_sx=" +
               (rep.t_sigma_x_flips_chirality ? "yes" : "no"));
}

void criterion_12_audit_report() {
    RunConfig cfg;
    cfg.n_max = 100;
    cfg.margin = 10;
    cfg.points = 400;
    const AuditReport rep = run_audit(cfg);

    bool ok = rep.identity.verdict == "consistent";
    ok = ok && rep.identity.rel_err_vs_consistent <= 1e-2;
    ok = ok && rep.identity.c_printed_hamiltonian == -rep.identity.c_consistent;
    ok = ok && rep.commutator.overlap >= 0.999;
    ok = ok && rep.series.size() == 2;
    for (const auto& s : rep.series)
        ok = ok && std::isfinite(s.max_dev_sz) && std::isfinite(s.max_dev_lz) &&
             std::isfinite(s.max_dev_jz);
    ok = ok && rep.eigenstates.min_fidelity >= 1.0 - 1e-6;
    ok = ok && rep.expectation_equiv_max_rel <= 1e-10;
    const std::string json = audit_to_json(rep);
    ok = ok && json.find("identity_coefficient") != std::string::npos;

    report(12, "adjudication report is produced and internally consistent", ok,
           "fit rel err=" + fmt(rep.identity.rel_err_vs_consistent) +
               " overlap=" + fmt(rep.commutator.overlap) +
               " series dev jz=" + fmt(rep.series.front().max_dev_jz));
}

} // namespace

int main() {
    criterion_1_undeformed_reduction();
    criterion_2_deformed_spectrum();
    criterion_3_mirror_sum();
    criterion_4_level_curves();
    criterion_5_metric_balance();
    criterion_6_hermitization();
    criterion_7_eigenstates();
    criterion_8_dynamics_identities();
    criterion_9_fock_second_order();
    criterion_10_collapse_revival();
    criterion_11_symmetry_verdicts();
    criterion_12_audit_report();
    if (g_failures == 0) {
        std::printf("all 12 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
