#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace kjc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Spin-major composite basis |sigma, n> with sigma = 0 for spin-up, 1 for
// spin-down and n = 0..n_max the Fock level. Index k = sigma*(n_max+1) + n,
// so the spin-up block comes first and kron(spin_op, fock_op) lands on the
// right entries.
struct CompositeBasis {
    int n_max;

    explicit CompositeBasis(int n_max_) : n_max(n_max_) {
        if (n_max < 4)
            throw std::invalid_argument("CompositeBasis: n_max must be >= 4");
    }

    int fock_dim() const { return n_max + 1; }
    int dim() const { return 2 * (n_max + 1); }

    int index(int sigma, int n) const {
        if (sigma != 0 && sigma != 1)
            throw std::domain_error("CompositeBasis: sigma must be 0 (up) or 1 (down)");
        if (n < 0 || n > n_max)
            throw std::domain_error("CompositeBasis: Fock level out of range");
        return sigma * (n_max + 1) + n;
    }

    int spin_of(int k) const {
        check_index(k);
        return k / (n_max + 1);
    }

    int level_of(int k) const {
        check_index(k);
        return k % (n_max + 1);
    }

    // Projector onto Fock levels n <= n_max - margin (both spins); used to
    // keep truncation artifacts at the top of the ladder out of comparisons.
    Eigen::VectorXd interior_mask(int margin) const {
        if (margin < 0 || margin > n_max)
            throw std::invalid_argument("CompositeBasis: bad edge margin");
        Eigen::VectorXd mask = Eigen::VectorXd::Zero(dim());
        for (int sigma = 0; sigma < 2; ++sigma)
            for (int n = 0; n + margin <= n_max; ++n)
                mask(index(sigma, n)) = 1.0;
        return mask;
    }

  private:
    void check_index(int k) const {
        if (k < 0 || k >= dim())
            throw std::domain_error("CompositeBasis: composite index out of range");
    }
};

} // namespace kjc
