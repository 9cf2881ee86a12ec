#include "kjc/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace kjc {

namespace {

void require_square_finite(const Matrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    if (!m.allFinite())
        throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
}

} // namespace

Matrix matrix_exponential(const Matrix& m) {
    require_square_finite(m, "matrix_exponential");
    return m.exp();
}

std::vector<Eigenpair> general_eigenpairs(const Matrix& m) {
    require_square_finite(m, "general_eigenpairs");
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("general_eigenpairs: eigensolver failed to converge");
    const auto dim = m.rows();
    std::vector<Eigenpair> pairs(static_cast<size_t>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) {
        pairs[static_cast<size_t>(k)].value = solver.eigenvalues()(k);
        Vector v = solver.eigenvectors().col(k);
        v.normalize();
        pairs[static_cast<size_t>(k)].vector = v;
    }
    std::sort(pairs.begin(), pairs.end(), [](const Eigenpair& a, const Eigenpair& b) {
        if (a.value.real() != b.value.real())
            return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return pairs;
}

double hermiticity_residual(const Matrix& m) {
    require_square_finite(m, "hermiticity_residual");
    const double num = (m - m.adjoint()).norm();
    return num / std::max(1.0, m.norm());
}

Complex frobenius_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("frobenius_inner: shape mismatch");
    return (a.adjoint() * b).trace();
}

} // namespace kjc
