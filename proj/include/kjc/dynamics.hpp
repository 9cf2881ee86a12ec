#pragma once

#include <vector>

#include "kjc/metric.hpp"
#include "kjc/models.hpp"
#include "kjc/spectra.hpp"

namespace kjc {

// Diagonal observables on the composite basis (single retained mode):
// Sz = (hbar/2) sz x 1, Lz = hbar 1 x N, Jz = Lz + Sz.
Eigen::VectorXd sz_diagonal(const ModelParams& p, int n_max);
Eigen::VectorXd lz_diagonal(const ModelParams& p, int n_max);
Eigen::VectorXd jz_diagonal(const ModelParams& p, int n_max);
Matrix sz_operator(const ModelParams& p, int n_max);
Matrix lz_operator(const ModelParams& p, int n_max);
Matrix jz_operator(const ModelParams& p, int n_max);

double diagonal_expectation(const Eigen::VectorXd& diag, const Vector& psi);

// Oscillation bookkeeping for the block starting at Fock level n (plus
// branch): bare Rabi frequency omega_n = E_n/hbar, deformation frequency
// shift phi_eps_n, the shifted pair, and the beat Phi = phi_n - phi_{n+2}
// (n-independent).
struct FrequencySet {
    double omega_n;
    double phi_eps_n;
    double omega_eps_plus;
    double omega_eps_minus;
    double beat_phi;
};

FrequencySet zitter_frequencies(int n, const ModelParams& p);

// Population amplitudes of the undeformed block {|n,up>, |n+1,down>}:
// f = cos(w t) - i sin(w t)/sqrt(1+4xi(n+1)), g = 2 sin(w t) alpha beta,
// with |f|^2 + |g|^2 = 1.
struct FGPair {
    Complex f;
    double g;
};

FGPair fg_amplitudes(int n, double t, const ModelParams& p);

// Quoted closed-form evolved state of |n,up> under the Hermitian counterpart
// (plus branch): main block plus O(eps) satellites at n-2..n+3.
Vector evolve_closed(int n, double t, const ModelParams& p, int n_max);

// Spectral propagator exp(-i h t / hbar) for a Hermitian h.
class SpectralPropagator {
  public:
    SpectralPropagator(const Matrix& h, double hbar, double herm_tol = 1e-8);
    Vector coefficients(const Vector& psi0) const; // eigenbasis amplitudes
    Vector state_from(const Vector& coeffs, double t) const;
    Vector evolve(const Vector& psi0, double t) const;
    const Eigen::VectorXd& eigenvalues() const { return evals_; }
    const Matrix& eigenvectors() const { return evecs_; }

  private:
    Eigen::VectorXd evals_;
    Matrix evecs_;
    double hbar_;
};

struct InitialState {
    enum class Kind { Fock, Coherent };
    Kind kind = Kind::Fock;
    int n = 0;          // Fock level (Fock kind)
    double mean = 25.0; // mean photon number (Coherent kind)

    bool operator==(const InitialState&) const = default;
};

Vector initial_state_vector(const InitialState& init, int n_max);

enum class Method { Numeric, Closed, PrintedSeries };

// Reading of the factorial in the quoted coherent-state series weights
// <n>^(n+1) e^(-<n>)/n!: either n! or (n+1)!.
enum class FactorialReading { NFact, NPlusOneFact };

struct TimeSeries {
    std::vector<double> t;
    std::vector<double> sz;
    std::vector<double> lz;
    std::vector<double> jz;
    bool clipped_satellites = false;
};

std::vector<double> linear_grid(double t_max, int points);

// Collapse-revival time scale for a coherent run:
// t_R = pi sqrt(1 + 4 xi <n>) hbar / (xi m c^2).
double revival_time(const ModelParams& p, double mean);

// Evolve `init` under the branch Hamiltonian and record Sz, Lz, Jz.
// Numeric: Hermitian counterpart rho H rho^{-1} (edge-symmetrized),
// spectral propagation; this is the ground truth. Closed: superposition of
// quoted per-level evolutions. PrintedSeries: the quoted coherent-state sums,
// evaluated verbatim (coherent initial states only).
TimeSeries simulate(const ModelParams& p, const InitialState& init,
                    const std::vector<double>& tgrid, Method method, int n_max,
                    FactorialReading reading = FactorialReading::NFact);

// Pointwise run_eps minus run_zero; grids must match exactly.
TimeSeries delta_series(const TimeSeries& run_eps, const TimeSeries& run_zero);

struct DeltaSeries {
    TimeSeries eps_run;
    TimeSeries zero_run;
    TimeSeries delta; // eps minus zero, pointwise
};

// Convenience: simulate at params.epsilon and at epsilon = 0, same grid.
DeltaSeries run_delta(const ModelParams& p, const InitialState& init,
                      const std::vector<double>& tgrid, Method method, int n_max);

// Quoted series value at one time point (coherent mean); exposed for audits.
struct SeriesPoint {
    double sz;
    double lz;
    double jz;
};

SeriesPoint printed_series_point(const ModelParams& p, double mean, double t,
                                 FactorialReading reading);

} // namespace kjc
