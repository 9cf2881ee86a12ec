#include "kjc/metric.hpp"

#include <cstdio>

#include <Eigen/Eigenvalues>

#include "kjc/fock.hpp"
#include "kjc/numerics.hpp"

namespace kjc {

MetricBundle build_rho(const ModelParams& p, int n_max) {
    p.validate();
    const CompositeBasis basis(n_max);
    // eps * n_max controls the series decay of exp(eps G); past ~0.2 the edge
    // junk starts crawling toward the interior, so flag it but keep going.
    if (p.epsilon * n_max > 0.2)
        std::fprintf(stderr, "build_rho: warning: eps * n_max = %.3g > 0.2; widen the edge "
                             "margin before trusting interior results\n",
                     p.epsilon * n_max);
    const Matrix a = annihilation_operator(n_max);
    const Matrix ad = creation_operator(n_max);
    const Matrix g = a * a - ad * ad + number_operator(n_max);
    const double sgn = p.branch == Branch::Plus ? 1.0 : -1.0;
    const Matrix exponent = sgn * p.epsilon * g;
    const Matrix spin_id = pauli(PauliKind::Identity);

    MetricBundle bundle;
    bundle.rho = spin_fock_kron(spin_id, matrix_exponential(exponent));
    bundle.rho_inv = spin_fock_kron(spin_id, matrix_exponential(-exponent));
    bundle.eta = bundle.rho.adjoint() * bundle.rho;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(bundle.eta, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("build_rho: eta eigensolve failed");
    bundle.min_eta_eigenvalue = solver.eigenvalues().minCoeff();
    if (bundle.min_eta_eigenvalue <= 0.0)
        throw std::runtime_error("build_rho: eta lost positive definiteness");
    return bundle;
}

namespace {

void check_shapes(const Matrix& h, const MetricBundle& bundle, const char* who) {
    if (h.rows() != h.cols())
        throw std::invalid_argument(std::string(who) + ": H must be square");
    if (h.rows() != bundle.rho.rows())
        throw std::invalid_argument(std::string(who) + ": H and bundle dimensions differ");
}

} // namespace

Matrix hermitize(const Matrix& h_in, const MetricBundle& bundle) {
    check_shapes(h_in, bundle, "hermitize");
    return bundle.rho * h_in * bundle.rho_inv;
}

double quasi_residual(const Matrix& h_in, const MetricBundle& bundle, int margin) {
    check_shapes(h_in, bundle, "quasi_residual");
    const int n_max = static_cast<int>(h_in.rows() / 2) - 1;
    const CompositeBasis basis(n_max);
    const Eigen::VectorXd mask = basis.interior_mask(margin);
    const Matrix defect = h_in.adjoint() * bundle.eta - bundle.eta * h_in;
    const Matrix masked = mask.asDiagonal() * defect * mask.asDiagonal();
    return masked.norm() / h_in.norm();
}

Complex eta_inner(const Vector& u, const Vector& v, const MetricBundle& bundle) {
    if (u.size() != v.size() || u.size() != bundle.eta.rows())
        throw std::invalid_argument("eta_inner: dimension mismatch");
    return u.dot(bundle.eta * v);
}

std::pair<Complex, Complex> expectation_equiv(const Matrix& h_in, const MetricBundle& bundle,
                                              const Vector& phi) {
    check_shapes(h_in, bundle, "expectation_equiv");
    if (phi.size() != h_in.rows())
        throw std::invalid_argument("expectation_equiv: state dimension mismatch");
    const Complex lhs = phi.dot(bundle.eta * (h_in * phi));
    const Vector psi = bundle.rho * phi;
    const Matrix h = hermitize(h_in, bundle);
    const Complex rhs = psi.dot(h * psi);
    return {lhs, rhs};
}

} // namespace kjc
