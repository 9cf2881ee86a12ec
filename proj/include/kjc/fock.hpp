#pragma once

#include "kjc/basis.hpp"

namespace kjc {

// Truncated single-mode ladder operators on Fock levels 0..n_max.
Matrix annihilation_operator(int n_max);
Matrix creation_operator(int n_max);
Matrix number_operator(int n_max);
Matrix fock_identity(int n_max);

enum class PauliKind { Identity, X, Y, Z, Plus, Minus };

// 2x2 spin operators in the {up, down} ordering used by CompositeBasis.
Matrix pauli(PauliKind kind);

// Kronecker product, spin factor slow / Fock factor fast, matching
// CompositeBasis::index.
Matrix spin_fock_kron(const Matrix& spin, const Matrix& fock);

// Normalized truncated coherent state. Throws if the discarded Poisson tail
// mass above n_max exceeds tail_tol; the message reports the smallest
// acceptable n_max.
Vector coherent_state(Complex alpha, int n_max, double tail_tol = 1e-12);

// Smallest n_max whose discarded tail mass is below tail_tol.
int coherent_required_nmax(Complex alpha, double tail_tol = 1e-12);

} // namespace kjc
