#include "kjc/fock.hpp"

#include <cmath>

namespace kjc {

Matrix annihilation_operator(int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("annihilation_operator: n_max must be >= 1");
    Matrix a = Matrix::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Matrix creation_operator(int n_max) {
    return annihilation_operator(n_max).adjoint();
}

Matrix number_operator(int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("number_operator: n_max must be >= 1");
    Matrix n_op = Matrix::Zero(n_max + 1, n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        n_op(n, n) = static_cast<double>(n);
    return n_op;
}

Matrix fock_identity(int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("fock_identity: n_max must be >= 1");
    return Matrix::Identity(n_max + 1, n_max + 1);
}

Matrix pauli(PauliKind kind) {
    Matrix m = Matrix::Zero(2, 2);
    const Complex i(0.0, 1.0);
    switch (kind) {
    case PauliKind::Identity:
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        break;
    case PauliKind::X:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case PauliKind::Y:
        m(0, 1) = -i;
        m(1, 0) = i;
        break;
    case PauliKind::Z:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    case PauliKind::Plus: // |up><down|
        m(0, 1) = 1.0;
        break;
    case PauliKind::Minus: // |down><up|
        m(1, 0) = 1.0;
        break;
    }
    return m;
}

Matrix spin_fock_kron(const Matrix& spin, const Matrix& fock) {
    if (spin.rows() != 2 || spin.cols() != 2)
        throw std::invalid_argument("spin_fock_kron: spin factor must be 2x2");
    const auto fd = fock.rows();
    if (fock.cols() != fd)
        throw std::invalid_argument("spin_fock_kron: fock factor must be square");
    Matrix out = Matrix::Zero(2 * fd, 2 * fd);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (spin(r, c) != Complex(0.0, 0.0))
                out.block(r * fd, c * fd, fd, fd) = spin(r, c) * fock;
    return out;
}

namespace {

// Poisson weights of |alpha|^2 accumulated in linear space; |alpha|^2 stays
// desk scale here (tails handled by the explicit ratio recursion).
double poisson_tail_above(double mean, int n_max) {
    double term = std::exp(-mean);
    double cum = term;
    for (int n = 1; n <= n_max; ++n) {
        term *= mean / static_cast<double>(n);
        cum += term;
    }
    return 1.0 - cum;
}

} // namespace

int coherent_required_nmax(Complex alpha, double tail_tol) {
    const double mean = std::norm(alpha);
    int n_max = static_cast<int>(std::ceil(mean)) + 1;
    while (poisson_tail_above(mean, n_max) >= tail_tol)
        ++n_max;
    return n_max;
}

Vector coherent_state(Complex alpha, int n_max, double tail_tol) {
    if (n_max < 1)
        throw std::invalid_argument("coherent_state: n_max must be >= 1");
    const double mean = std::norm(alpha);
    if (poisson_tail_above(mean, n_max) >= tail_tol) {
        const int need = coherent_required_nmax(alpha, tail_tol);
        throw std::invalid_argument(
            "coherent_state: truncated tail mass exceeds " + std::to_string(tail_tol) +
            "; need n_max >= " + std::to_string(need));
    }
    Vector psi(n_max + 1);
    Complex amp = std::exp(Complex(-mean / 2.0, 0.0));
    psi(0) = amp;
    for (int n = 1; n <= n_max; ++n) {
        amp *= alpha / std::sqrt(static_cast<double>(n));
        psi(n) = amp;
    }
    psi.normalize();
    return psi;
}

} // namespace kjc
