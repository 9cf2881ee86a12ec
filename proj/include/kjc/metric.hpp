#pragma once

#include "kjc/params.hpp"

namespace kjc {

// rho = exp(sgn * eps * (a a - a+ a+ + N)) acting on the Fock factor only,
// with sgn = +1 on the plus branch and -1 on the minus branch (the minus
// branch needs the opposite exponent for the O(eps) anti-Hermitian coupling
// to cancel; same commutator algebra, opposite resonant sign).
struct MetricBundle {
    Matrix rho;      // composite basis
    Matrix rho_inv;  // exp of the negated exponent (exact inverse up to round-off)
    Matrix eta;      // rho^dagger rho, positive definite
    double min_eta_eigenvalue = 0.0;
};

MetricBundle build_rho(const ModelParams& p, int n_max);

// h = rho H rho^{-1}; Hermitian up to O(eps^2) in the interior (and up to
// truncation junk in the top few rows, which callers symmetrize or mask).
Matrix hermitize(const Matrix& h_in, const MetricBundle& bundle);

// || P (H^dag eta - eta H) P ||_F / ||H||_F with P the interior projector.
double quasi_residual(const Matrix& h_in, const MetricBundle& bundle, int margin);

// <u, eta v>
Complex eta_inner(const Vector& u, const Vector& v, const MetricBundle& bundle);

// Returns the pair (<phi| eta H |phi>, <rho phi| h |rho phi>); equal as an
// exact operator identity, not perturbatively.
std::pair<Complex, Complex> expectation_equiv(const Matrix& h_in, const MetricBundle& bundle,
                                              const Vector& phi);

} // namespace kjc
