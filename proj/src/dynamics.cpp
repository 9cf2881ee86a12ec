#include "kjc/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "kjc/fock.hpp"
#include "kjc/numerics.hpp"

namespace kjc {

namespace {

// sqrt(n(n-1)), the satellite coupling weight; vanishes below n = 2, which
// automatically removes out-of-range lower satellites.
double c_coeff(int n) {
    if (n < 2)
        return 0.0;
    return std::sqrt(static_cast<double>(n) * (n - 1.0));
}

void require_plus_branch(const ModelParams& p, const char* what) {
    if (p.branch != Branch::Plus)
        throw std::invalid_argument(std::string(what) +
                                    ": closed forms cover the excitation-conserving branch only");
}

void validate_grid(const std::vector<double>& tgrid) {
    if (tgrid.empty())
        throw std::invalid_argument("time grid must not be empty");
    for (std::size_t i = 1; i < tgrid.size(); ++i)
        if (!(tgrid[i] > tgrid[i - 1]))
            throw std::invalid_argument("time grid must be strictly increasing");
    for (double t : tgrid)
        if (!std::isfinite(t))
            throw std::invalid_argument("time grid must be finite");
}

// Adds weight * |Psi_n(t)> to psi, where |Psi_n(t)> is the quoted evolution of
// |n,up>: the main block at phase exp(i phi_n t) plus epsilon-weighted
// satellites at levels n-2 .. n+3, two of which evolve with the neighboring
// block phases phi_{n-2}, phi_{n+2}. Satellites beyond n_max are dropped and
// flagged.
void accumulate_closed(Vector& psi, Complex weight, int n, double t, const ModelParams& p,
                       const CompositeBasis& b, bool* clipped) {
    const double eps = p.epsilon;
    const FrequencySet fr = zitter_frequencies(n, p);
    const Complex phase_n = std::exp(Complex(0.0, fr.phi_eps_n * t));
    const FGPair fgn = fg_amplitudes(n, t, p);

    auto add = [&](int sigma, int level, Complex amp) {
        if (amp == Complex(0.0, 0.0))
            return;
        if (level < 0 || level > b.n_max) {
            if (clipped != nullptr)
                *clipped = true;
            return;
        }
        psi(b.index(sigma, level)) += weight * amp;
    };

    add(0, n, phase_n * fgn.f);
    add(1, n + 1, phase_n * fgn.g);

    if (eps == 0.0)
        return;

    const double cn = c_coeff(n);
    const double cn1 = c_coeff(n + 1);
    const double cn2 = c_coeff(n + 2);
    const double cn3 = c_coeff(n + 3);

    // Same-phase satellite block.
    add(0, n - 2, eps * cn * phase_n * fgn.f);
    add(1, n - 1, eps * cn1 * phase_n * fgn.g);
    add(0, n + 2, -eps * cn2 * phase_n * fgn.f);
    add(1, n + 3, eps * cn3 * phase_n * fgn.g);

    // Neighboring-block lines carrying their own phases; these cancel the
    // same-phase satellites exactly at t = 0.
    if (cn != 0.0) {
        const Complex phase_m = std::exp(Complex(0.0, zitter_frequencies(n - 2, p).phi_eps_n * t));
        const FGPair fgm = fg_amplitudes(n - 2, t, p);
        add(0, n - 2, -eps * cn * phase_m * fgm.f);
        add(1, n - 1, -eps * cn * phase_m * fgm.g);
    }
    {
        const Complex phase_p = std::exp(Complex(0.0, zitter_frequencies(n + 2, p).phi_eps_n * t));
        const FGPair fgp = fg_amplitudes(n + 2, t, p);
        add(0, n + 2, eps * cn2 * phase_p * fgp.f);
        add(1, n + 3, eps * cn2 * phase_p * fgp.g);
    }
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

} // namespace

Eigen::VectorXd sz_diagonal(const ModelParams& p, int n_max) {
    const CompositeBasis b(n_max);
    Eigen::VectorXd d(b.dim());
    for (int k = 0; k < b.dim(); ++k)
        d(k) = 0.5 * p.hbar * (b.spin_of(k) == 0 ? 1.0 : -1.0);
    return d;
}

Eigen::VectorXd lz_diagonal(const ModelParams& p, int n_max) {
    const CompositeBasis b(n_max);
    Eigen::VectorXd d(b.dim());
    for (int k = 0; k < b.dim(); ++k)
        d(k) = p.hbar * b.level_of(k);
    return d;
}

Eigen::VectorXd jz_diagonal(const ModelParams& p, int n_max) {
    return sz_diagonal(p, n_max) + lz_diagonal(p, n_max);
}

Matrix sz_operator(const ModelParams& p, int n_max) {
    return (0.5 * p.hbar) * spin_fock_kron(pauli(PauliKind::Z), fock_identity(n_max));
}

Matrix lz_operator(const ModelParams& p, int n_max) {
    return p.hbar * spin_fock_kron(pauli(PauliKind::Identity), number_operator(n_max));
}

Matrix jz_operator(const ModelParams& p, int n_max) {
    return sz_operator(p, n_max) + lz_operator(p, n_max);
}

double diagonal_expectation(const Eigen::VectorXd& diag, const Vector& psi) {
    if (diag.size() != psi.size())
        throw std::invalid_argument("diagonal_expectation: size mismatch");
    double acc = 0.0;
    for (Eigen::Index k = 0; k < psi.size(); ++k)
        acc += diag(k) * std::norm(psi(k));
    return acc;
}

FrequencySet zitter_frequencies(int n, const ModelParams& p) {
    if (n < 0)
        throw std::domain_error("zitter_frequencies: n must be >= 0");
    FrequencySet fr;
    fr.omega_n = energy_undeformed(n, +1, p) / p.hbar;
    const double mc2 = p.mc2();
    const int theta = branch_theta(p.branch);
    fr.phi_eps_n = 4.0 * mc2 * mc2 * p.epsilon * p.xi() * (n + theta) / p.hbar;
    fr.omega_eps_plus = fr.omega_n - fr.phi_eps_n;
    fr.omega_eps_minus = -fr.omega_n - fr.phi_eps_n;
    fr.beat_phi = -8.0 * mc2 * mc2 * p.xi() * p.epsilon / p.hbar;
    return fr;
}

FGPair fg_amplitudes(int n, double t, const ModelParams& p) {
    const double en = energy_undeformed(n, +1, p);
    const double w = en / p.hbar;
    const AlphaBeta ab = alpha_beta(n, p);
    FGPair out;
    out.f = Complex(std::cos(w * t), -std::sin(w * t) * p.mc2() / en);
    out.g = 2.0 * std::sin(w * t) * ab.alpha * ab.beta;
    return out;
}

Vector evolve_closed(int n, double t, const ModelParams& p, int n_max) {
    if (n < 0)
        throw std::domain_error("evolve_closed: n must be >= 0");
    require_plus_branch(p, "evolve_closed");
    const CompositeBasis b(n_max);
    if (n > n_max)
        throw std::domain_error("evolve_closed: n beyond the basis");
    Vector psi = Vector::Zero(b.dim());
    bool clipped = false;
    accumulate_closed(psi, Complex(1.0, 0.0), n, t, p, b, &clipped);
    if (clipped)
        std::fprintf(stderr,
                     "evolve_closed: satellite level beyond n_max=%d clipped (n=%d)\n",
                     n_max, n);
    return psi;
}

SpectralPropagator::SpectralPropagator(const Matrix& h, double hbar, double herm_tol)
    : hbar_(hbar) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("SpectralPropagator: matrix must be square");
    if (!(hbar > 0.0))
        throw std::invalid_argument("SpectralPropagator: hbar must be > 0");
    const double res = hermiticity_residual(h);
    if (res > herm_tol)
        throw std::invalid_argument("SpectralPropagator: generator is not Hermitian (residual " +
                                    std::to_string(res) + ")");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("SpectralPropagator: eigendecomposition failed");
    evals_ = es.eigenvalues();
    evecs_ = es.eigenvectors();
}

Vector SpectralPropagator::coefficients(const Vector& psi0) const {
    if (psi0.size() != evecs_.rows())
        throw std::invalid_argument("SpectralPropagator: state dimension mismatch");
    return evecs_.adjoint() * psi0;
}

Vector SpectralPropagator::state_from(const Vector& coeffs, double t) const {
    if (coeffs.size() != evecs_.cols())
        throw std::invalid_argument("SpectralPropagator: coefficient dimension mismatch");
    Vector rotated(coeffs.size());
    for (Eigen::Index j = 0; j < coeffs.size(); ++j)
        rotated(j) = coeffs(j) * std::exp(Complex(0.0, -evals_(j) * t / hbar_));
    return evecs_ * rotated;
}

Vector SpectralPropagator::evolve(const Vector& psi0, double t) const {
    return state_from(coefficients(psi0), t);
}

Vector initial_state_vector(const InitialState& init, int n_max) {
    const CompositeBasis b(n_max);
    Vector psi = Vector::Zero(b.dim());
    if (init.kind == InitialState::Kind::Fock) {
        if (init.n < 0 || init.n > n_max)
            throw std::invalid_argument("initial_state_vector: Fock level out of range");
        psi(b.index(0, init.n)) = Complex(1.0, 0.0);
        return psi;
    }
    if (init.mean < 0.0)
        throw std::invalid_argument("initial_state_vector: mean photon number must be >= 0");
    const Vector coh = coherent_state(Complex(std::sqrt(init.mean), 0.0), n_max);
    for (int m = 0; m <= n_max; ++m)
        psi(b.index(0, m)) = coh(m);
    return psi;
}

std::vector<double> linear_grid(double t_max, int points) {
    if (points < 2)
        throw std::invalid_argument("linear_grid: need at least 2 points");
    if (!(t_max > 0.0))
        throw std::invalid_argument("linear_grid: t_max must be > 0");
    std::vector<double> t(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        t[static_cast<std::size_t>(i)] = t_max * static_cast<double>(i) / (points - 1);
    return t;
}

double revival_time(const ModelParams& p, double mean) {
    if (mean < 0.0)
        throw std::invalid_argument("revival_time: mean photon number must be >= 0");
    const double xi = p.xi();
    return M_PI * std::sqrt(1.0 + 4.0 * xi * mean) * p.hbar / (xi * p.mc2());
}

SeriesPoint printed_series_point(const ModelParams& p, double mean, double t,
                                 FactorialReading reading) {
    require_plus_branch(p, "printed_series_point");
    if (mean < 0.0)
        throw std::invalid_argument("printed_series_point: mean must be >= 0");
    const double hbar = p.hbar;
    const double xi = p.xi();
    const double eps = p.epsilon;
    const double mc2 = p.mc2();
    const double beat = -8.0 * mc2 * mc2 * xi * eps / hbar;

    const int n_cut =
        (mean == 0.0) ? 0 : coherent_required_nmax(Complex(std::sqrt(mean), 0.0));

    auto poisson = [&](int n) {
        if (mean == 0.0)
            return n == 0 ? 1.0 : 0.0;
        return std::exp(n * std::log(mean) - mean - log_factorial(n));
    };
    auto weight = [&](int n) { // <n>^(n+1) e^(-<n>) / n!  (or (n+1)! reading)
        if (mean == 0.0)
            return 0.0;
        const double logf =
            reading == FactorialReading::NFact ? log_factorial(n) : log_factorial(n + 1);
        return std::exp((n + 1) * std::log(mean) - mean - logf);
    };
    auto omega_of = [&](int n) { return energy_undeformed(n, +1, p) / hbar; };
    auto s_of = [&](int n) {
        const double r = 4.0 * xi * (n + 1.0) / (1.0 + 4.0 * xi * (n + 1.0));
        const double sn = std::sin(omega_of(n) * t);
        return r * sn * sn;
    };

    double sum_p = 0.0, sum_ws = 0.0, sum_wl = 0.0;
    for (int n = 0; n <= n_cut; ++n) {
        const double pn = poisson(n);
        const double wn = weight(n);
        sum_p += pn * s_of(n);
        if (eps != 0.0 && wn != 0.0) {
            sum_ws += wn * (s_of(n) - s_of(n + 2));

            const double w1 = omega_of(n);
            const double w2 = omega_of(n + 2);
            const double r1 = std::sqrt(1.0 + 4.0 * xi * (n + 1.0));
            const double r2 = std::sqrt(1.0 + 4.0 * xi * (n + 3.0));
            const double wn_t = 2.0 * std::cos(w1 * t) * std::cos(w2 * t) +
                                2.0 * std::sin(w1 * t) * std::sin(w2 * t) / (r1 * r2);
            const double sn_t = 2.0 * std::cos(w2 * t) * std::sin(w1 * t) / r1 -
                                2.0 * std::cos(w1 * t) * std::sin(w2 * t) / r2;
            const double pn_t = 2.0 * alpha_beta(n, p).alpha * alpha_beta(n + 2, p).alpha *
                                std::sin(w1 * t) * std::sin(w2 * t);
            const double c2 = c_coeff(n + 2);
            const double c3 = c_coeff(n + 3);
            const double denom = std::exp(-0.5 * log_factorial(n + 2));
            const double ln = (4.0 * c2 - 2.0 * c2 * wn_t * std::cos(beat * t) -
                               2.0 * c2 * sn_t * std::sin(beat * t) -
                               2.0 * c3 * pn_t * std::cos(beat * t)) *
                              denom;
            sum_wl += wn * ln;
        }
    }

    SeriesPoint out;
    out.sz = 0.5 * hbar - hbar * sum_p + hbar * eps * sum_ws;
    out.lz = hbar * mean + hbar * sum_p - hbar * eps * sum_ws + hbar * eps * sum_wl;
    out.jz = hbar * (mean + 0.5) + hbar * eps * sum_wl;
    return out;
}

TimeSeries simulate(const ModelParams& p, const InitialState& init,
                    const std::vector<double>& tgrid, Method method, int n_max,
                    FactorialReading reading) {
    p.validate();
    validate_grid(tgrid);
    const CompositeBasis b(n_max);
    if (init.kind == InitialState::Kind::Coherent) {
        const double guard = init.mean + 10.0 * std::sqrt(init.mean);
        if (n_max < guard)
            throw std::invalid_argument(
                "simulate: coherent runs need n_max >= mean + 10*sqrt(mean)");
    }

    TimeSeries ts;
    ts.t = tgrid;
    ts.sz.resize(tgrid.size());
    ts.lz.resize(tgrid.size());
    ts.jz.resize(tgrid.size());

    const Eigen::VectorXd szd = sz_diagonal(p, n_max);
    const Eigen::VectorXd lzd = lz_diagonal(p, n_max);
    const Eigen::VectorXd jzd = jz_diagonal(p, n_max);

    switch (method) {
    case Method::Numeric: {
        const Matrix big_h = build_kappa(p, n_max);
        Matrix h;
        if (p.epsilon == 0.0) {
            h = big_h;
        } else {
            const MetricBundle bundle = build_rho(p, n_max);
            h = hermitize(big_h, bundle);
        }
        // Truncation leaves non-Hermitian junk in the top rows of the
        // similarity transform; symmetrizing is edge-localized and keeps the
        // propagator exactly unitary.
        h = 0.5 * (h + Matrix(h.adjoint()));
        const SpectralPropagator prop(h, p.hbar);
        const Vector psi0 = initial_state_vector(init, n_max);
        const Vector coeffs = prop.coefficients(psi0);
        for (std::size_t i = 0; i < tgrid.size(); ++i) {
            const Vector psi = prop.state_from(coeffs, tgrid[i]);
            ts.sz[i] = diagonal_expectation(szd, psi);
            ts.lz[i] = diagonal_expectation(lzd, psi);
            ts.jz[i] = diagonal_expectation(jzd, psi);
        }
        break;
    }
    case Method::Closed: {
        require_plus_branch(p, "simulate");
        bool clipped = false;
        std::vector<std::pair<int, Complex>> components;
        if (init.kind == InitialState::Kind::Fock) {
            if (init.n > n_max)
                throw std::invalid_argument("simulate: Fock level beyond the basis");
            components.emplace_back(init.n, Complex(1.0, 0.0));
        } else {
            const Vector coh = coherent_state(Complex(std::sqrt(init.mean), 0.0), n_max);
            for (int m = 0; m <= n_max; ++m)
                if (coh(m) != Complex(0.0, 0.0))
                    components.emplace_back(m, coh(m));
        }
        for (std::size_t i = 0; i < tgrid.size(); ++i) {
            Vector psi = Vector::Zero(b.dim());
            for (const auto& [level, amp] : components)
                accumulate_closed(psi, amp, level, tgrid[i], p, b, &clipped);
            const double nrm2 = psi.squaredNorm();
            ts.sz[i] = diagonal_expectation(szd, psi) / nrm2;
            ts.lz[i] = diagonal_expectation(lzd, psi) / nrm2;
            ts.jz[i] = diagonal_expectation(jzd, psi) / nrm2;
        }
        ts.clipped_satellites = clipped;
        if (clipped)
            std::fprintf(stderr, "simulate: closed-form satellites beyond n_max=%d clipped\n",
                         n_max);
        break;
    }
    case Method::PrintedSeries: {
        require_plus_branch(p, "simulate");
        if (init.kind != InitialState::Kind::Coherent)
            throw std::invalid_argument(
                "simulate: the series method applies to coherent initial states only");
        for (std::size_t i = 0; i < tgrid.size(); ++i) {
            const SeriesPoint pt = printed_series_point(p, init.mean, tgrid[i], reading);
            ts.sz[i] = pt.sz;
            ts.lz[i] = pt.lz;
            ts.jz[i] = pt.jz;
        }
        break;
    }
    default:
        throw std::invalid_argument("simulate: unknown method");
    }
    return ts;
}

TimeSeries delta_series(const TimeSeries& run_eps, const TimeSeries& run_zero) {
    if (run_eps.t.size() != run_zero.t.size())
        throw std::invalid_argument("delta_series: grid size mismatch");
    for (std::size_t i = 0; i < run_eps.t.size(); ++i)
        if (run_eps.t[i] != run_zero.t[i])
            throw std::invalid_argument("delta_series: grids differ");
    TimeSeries d;
    d.t = run_eps.t;
    d.sz.resize(d.t.size());
    d.lz.resize(d.t.size());
    d.jz.resize(d.t.size());
    for (std::size_t i = 0; i < d.t.size(); ++i) {
        d.sz[i] = run_eps.sz[i] - run_zero.sz[i];
        d.lz[i] = run_eps.lz[i] - run_zero.lz[i];
        d.jz[i] = run_eps.jz[i] - run_zero.jz[i];
    }
    d.clipped_satellites = run_eps.clipped_satellites || run_zero.clipped_satellites;
    return d;
}

DeltaSeries run_delta(const ModelParams& p, const InitialState& init,
                      const std::vector<double>& tgrid, Method method, int n_max) {
    DeltaSeries out;
    out.eps_run = simulate(p, init, tgrid, method, n_max);
    out.zero_run = simulate(p.with_epsilon(0.0), init, tgrid, method, n_max);
    out.delta = delta_series(out.eps_run, out.zero_run);
    return out;
}

} // namespace kjc
