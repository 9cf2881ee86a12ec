#pragma once

#include <stdexcept>
#include <string>

#include "kjc/basis.hpp"

namespace kjc {

// Which coupling pattern the single retained mode carries: Plus is the
// excitation-conserving (JC) branch, Minus the anti-JC branch.
enum class Branch { Plus, Minus };

// Sign convention for the deformation's identity term C*(2N+1)*1. The
// Hamiltonian is usually quoted with C = +2*m*c^2*eps*xi, but only
// C = -2*m*c^2*eps*xi reproduces the closed-form deformed spectrum (the block
// trace fixes it exactly); we default to the spectrum-consistent sign and keep
// the quoted one selectable for auditing.
enum class DiagConvention { SpectrumConsistent, AsPrinted };

struct ModelParams {
    double mass = 1.0;
    double c = 1.0;
    double hbar = 1.0;
    double omega = 1.0;
    double epsilon = 5e-4; // dimensionless deformation, eps = m*c^2/(2*kappa)
    int s = +1;            // chirality sign of the retained mode
    Branch branch = Branch::Plus;
    DiagConvention convention = DiagConvention::SpectrumConsistent;

    void validate() const {
        if (!(mass > 0.0) || !(c > 0.0) || !(hbar > 0.0) || !(omega > 0.0))
            throw std::invalid_argument("ModelParams: mass, c, hbar, omega must be > 0");
        if (epsilon < 0.0)
            throw std::invalid_argument("ModelParams: epsilon must be >= 0");
        if (s != 1 && s != -1)
            throw std::invalid_argument("ModelParams: s must be +1 or -1");
    }

    double mc2() const { return mass * c * c; }
    double xi() const { return hbar * omega / mc2(); }

    // g = 2i*m*c^2*sqrt(xi)/hbar, purely imaginary, g* = -g.
    Complex coupling_g() const { return Complex(0.0, 2.0 * mc2() * std::sqrt(xi()) / hbar); }

    double detuning() const { return mc2(); } // delta
    double branch_sign() const { return branch == Branch::Plus ? 1.0 : -1.0; }

    // delta_eps = (1 -+ 2*eps*xi)*delta; upper sign for the plus branch.
    double delta_eps() const { return (1.0 - branch_sign() * 2.0 * epsilon * xi()) * detuning(); }

    double mu_plus() const { return 1.0 + epsilon; }
    double mu_minus() const { return 1.0 - epsilon; }

    // Coefficient C of the identity-term C*(2N+1)*1.
    double identity_coefficient() const {
        const double mag = 2.0 * mc2() * epsilon * xi();
        return convention == DiagConvention::SpectrumConsistent ? -mag : mag;
    }

    // Deformation-parameter bookkeeping: eps = m*c^2 * eps_kappa / 2,
    // eps_kappa = 1/kappa.
    double epsilon_kappa() const { return 2.0 * epsilon / mc2(); }
    double kappa() const {
        if (epsilon == 0.0)
            throw std::domain_error("ModelParams: kappa is infinite at epsilon = 0");
        return 1.0 / epsilon_kappa();
    }

    bool operator==(const ModelParams&) const = default;

    ModelParams with_epsilon(double eps) const {
        ModelParams p = *this;
        p.epsilon = eps;
        return p;
    }
    ModelParams with_s(int s_) const {
        ModelParams p = *this;
        p.s = s_;
        return p;
    }
};

inline std::string to_string(Branch b) { return b == Branch::Plus ? "jc" : "ajc"; }
inline std::string to_string(DiagConvention c) {
    return c == DiagConvention::SpectrumConsistent ? "consistent" : "printed";
}

} // namespace kjc
