#pragma once

#include <vector>

#include "kjc/basis.hpp"

namespace kjc {

// Dense matrix exponential (scaling-and-squaring Pade).
Matrix matrix_exponential(const Matrix& m);

struct Eigenpair {
    Complex value;
    Vector vector; // unit norm
};

// Full eigendecomposition of a general complex matrix, sorted by ascending
// real part (ties by imaginary part). Right eigenvectors, unit norm.
std::vector<Eigenpair> general_eigenpairs(const Matrix& m);

// ||M - M^dagger||_F / max(1, ||M||_F)
double hermiticity_residual(const Matrix& m);

// Frobenius inner product <A, B> = sum conj(A_ij) B_ij.
Complex frobenius_inner(const Matrix& a, const Matrix& b);

} // namespace kjc
