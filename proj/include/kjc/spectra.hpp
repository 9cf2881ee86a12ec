#pragma once

#include <vector>

#include "kjc/models.hpp"

namespace kjc {

// Theta(+) = 1, Theta(-) = 0: offset of the chiral quantum number inside the
// square root, set by which branch the mode couples to.
int branch_theta(Branch b);

// Lowest admissible chiral quantum number: 0 on the plus branch, 1 on minus.
int branch_n_min(Branch b);

// E_n = m c^2 sqrt(1 + 4 xi [n + Theta]); sign picks the upper or lower tower.
double energy_undeformed(int n, int sign, const ModelParams& p);

// sign*E_n - 4 m c^2 xi eps [n + Theta].
double energy_deformed(int n, int sign, const ModelParams& p);

// The asymmetric shift 4 m c^2 xi eps [n + Theta]; exact closed form, used for
// the level-gap column and the mirror-sum identity
// E^{eps+} + E^{eps-} = -2 * deformation_gap.
double deformation_gap(int n, const ModelParams& p);

// Chiral quantum number n_s = n + (|l| - s*l)/2 from the planar (n, l) pair.
int quantum_number_map(int n, int l, int s);

struct AlphaBeta {
    double alpha;
    double beta;
};

// alpha = sqrt((E_n + m c^2)/(2 E_n)), beta = sqrt((E_n - m c^2)/(2 E_n)).
AlphaBeta alpha_beta(int n, const ModelParams& p);

// Quoted eigenvectors of the deformed Hamiltonian (plus branch):
//   sign +: alpha|n,up> + i beta (1-eps)|n+1,down>
//   sign -: beta |n,up> - i alpha(1-eps)|n+1,down>
// Returned as printed (unit norm only up to O(eps)).
Vector eigvec_closed_H(int n, int sign, const ModelParams& p, int n_max);

// Quoted eigenvectors of the Hermitian counterpart (plus branch): the
// six-component superposition over levels n-2 .. n+3, verbatim.
Vector eigvec_closed_h(int n, int sign, const ModelParams& p, int n_max);

struct SpectralRow {
    int n;        // block index; -1 for the lone chain-end level
    int sign;     // +1 / -1 tower
    double e_closed;
    Complex e_numeric;
    double abs_err;
};

struct SpectralReport {
    std::vector<SpectralRow> rows; // interior levels only
    std::vector<std::string> excluded; // edge levels with reason
    double max_abs_err = 0.0;
    double max_imag = 0.0;
    int n_max = 0;
    int margin = 0;
};

// Compare the numeric spectrum of H against the closed forms, greedy
// nearest-real matching, interior blocks only (top `margin` Fock levels and
// the truncation-corrupted lone level are excluded).
SpectralReport numeric_vs_closed(const Matrix& h, const ModelParams& p, int margin);

struct Fig1Row {
    int n;
    double xi;
    double e_plus;
    double e_plus_deformed;
    double e_minus;
    double e_minus_deformed;
    double gap;
};

// Level curves of the undeformed and deformed towers over a xi grid.
std::vector<Fig1Row> fig1_data(const ModelParams& p, const std::vector<int>& n_list,
                               const std::vector<double>& xi_grid);

std::vector<double> default_xi_grid(); // 0 to 2, step 0.01
std::vector<int> default_fig1_levels(Branch b);

} // namespace kjc
