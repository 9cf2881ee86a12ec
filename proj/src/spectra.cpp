#include "kjc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kjc/numerics.hpp"

namespace kjc {

int branch_theta(Branch b) { return b == Branch::Plus ? 1 : 0; }
int branch_n_min(Branch b) { return b == Branch::Plus ? 0 : 1; }

namespace {

void check_level(int n, const ModelParams& p, const char* who) {
    if (n < branch_n_min(p.branch))
        throw std::domain_error(std::string(who) + ": chiral quantum number below branch minimum");
}

void check_sign(int sign, const char* who) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument(std::string(who) + ": sign must be +1 or -1");
}

} // namespace

double energy_undeformed(int n, int sign, const ModelParams& p) {
    p.validate();
    check_level(n, p, "energy_undeformed");
    check_sign(sign, "energy_undeformed");
    const double arg = 1.0 + 4.0 * p.xi() * (n + branch_theta(p.branch));
    return sign * p.mc2() * std::sqrt(arg);
}

double deformation_gap(int n, const ModelParams& p) {
    p.validate();
    check_level(n, p, "deformation_gap");
    return 4.0 * p.mc2() * p.xi() * p.epsilon * (n + branch_theta(p.branch));
}

double energy_deformed(int n, int sign, const ModelParams& p) {
    return energy_undeformed(n, sign, p) - deformation_gap(n, p);
}

int quantum_number_map(int n, int l, int s) {
    if (n < 0)
        throw std::domain_error("quantum_number_map: principal quantum number must be >= 0");
    if (s != 1 && s != -1)
        throw std::invalid_argument("quantum_number_map: s must be +1 or -1");
    return n + (std::abs(l) - s * l) / 2;
}

AlphaBeta alpha_beta(int n, const ModelParams& p) {
    const double e = energy_undeformed(n, +1, p);
    const double mc2 = p.mc2();
    return {std::sqrt((e + mc2) / (2.0 * e)), std::sqrt((e - mc2) / (2.0 * e))};
}

namespace {

void check_plus_branch(const ModelParams& p, const char* who) {
    if (p.branch != Branch::Plus)
        throw std::invalid_argument(std::string(who) + ": quoted for the plus (JC) branch only");
}

} // namespace

Vector eigvec_closed_H(int n, int sign, const ModelParams& p, int n_max) {
    p.validate();
    check_plus_branch(p, "eigvec_closed_H");
    check_sign(sign, "eigvec_closed_H");
    if (n < 0 || n + 1 > n_max)
        throw std::domain_error("eigvec_closed_H: block requires 0 <= n and n+1 <= n_max");
    const CompositeBasis basis(n_max);
    const auto [alpha, beta] = alpha_beta(n, p);
    const Complex i(0.0, 1.0);
    Vector v = Vector::Zero(basis.dim());
    if (sign > 0) {
        v(basis.index(0, n)) = alpha;
        v(basis.index(1, n + 1)) = i * beta * (1.0 - p.epsilon);
    } else {
        v(basis.index(0, n)) = beta;
        v(basis.index(1, n + 1)) = -i * alpha * (1.0 - p.epsilon);
    }
    return v;
}

namespace {

// c_n = sqrt(n(n-1)); zero for n < 2, so satellite components below the
// bottom of the ladder drop out by themselves.
double c_coeff(int n) { return n < 2 ? 0.0 : std::sqrt(double(n) * double(n - 1)); }

void add_amp(Vector& v, const CompositeBasis& basis, int sigma, int n, Complex amp) {
    if (std::abs(amp) == 0.0)
        return;
    if (n < 0 || n > basis.n_max)
        throw std::domain_error("eigvec_closed_h: satellite level outside basis; raise n_max");
    v(basis.index(sigma, n)) += amp;
}

} // namespace

Vector eigvec_closed_h(int n, int sign, const ModelParams& p, int n_max) {
    p.validate();
    check_plus_branch(p, "eigvec_closed_h");
    check_sign(sign, "eigvec_closed_h");
    if (n < 0 || n + 3 > n_max)
        throw std::domain_error("eigvec_closed_h: needs n >= 0 and n+3 <= n_max");
    const CompositeBasis basis(n_max);
    const auto [alpha, beta] = alpha_beta(n, p);
    const Complex i(0.0, 1.0);
    const double eps = p.epsilon;
    Vector v = Vector::Zero(basis.dim());
    if (sign > 0) {
        add_amp(v, basis, 0, n, alpha);
        add_amp(v, basis, 1, n + 1, i * beta);
        add_amp(v, basis, 0, n - 2, eps * alpha * c_coeff(n));
        add_amp(v, basis, 0, n + 2, -eps * alpha * c_coeff(n + 2));
        add_amp(v, basis, 1, n - 1, i * eps * beta * c_coeff(n + 1));
        add_amp(v, basis, 1, n + 3, -i * eps * beta * c_coeff(n + 3));
    } else {
        // The lower-tower display carries c_n (not c_{n+1}) on the |n-1,down>
        // satellite; kept verbatim.
        add_amp(v, basis, 0, n, beta);
        add_amp(v, basis, 1, n + 1, -i * alpha);
        add_amp(v, basis, 0, n - 2, eps * beta * c_coeff(n));
        add_amp(v, basis, 0, n + 2, -eps * beta * c_coeff(n + 2));
        add_amp(v, basis, 1, n - 1, -i * eps * alpha * c_coeff(n));
        add_amp(v, basis, 1, n + 3, i * eps * alpha * c_coeff(n + 3));
    }
    return v;
}

SpectralReport numeric_vs_closed(const Matrix& h, const ModelParams& p, int margin) {
    p.validate();
    if (h.rows() != h.cols() || h.rows() % 2 != 0)
        throw std::invalid_argument("numeric_vs_closed: expected a composite-basis matrix");
    const int n_max = static_cast<int>(h.rows() / 2) - 1;
    if (margin < 0 || n_max - margin < 2)
        throw std::invalid_argument("numeric_vs_closed: margin leaves no interior levels");

    SpectralReport report;
    report.n_max = n_max;
    report.margin = margin;

    const auto pairs = general_eigenpairs(h);
    std::vector<bool> used(pairs.size(), false);

    struct ClosedLevel {
        int n;
        int sign;
        double value;
        bool interior;
    };
    std::vector<ClosedLevel> closed;
    const int n_lo = branch_n_min(p.branch);
    const int n_hi_block = p.branch == Branch::Plus ? n_max - 1 : n_max;
    const int interior_top = p.branch == Branch::Plus ? n_max - margin - 1 : n_max - margin;
    // Lone chain-end level: |0,down> for the plus branch (value -delta_eps + C),
    // |0,up> for the minus branch (+delta_eps + C); always interior.
    const double chain_end = (p.branch == Branch::Plus ? -1.0 : 1.0) * p.delta_eps() +
                             p.identity_coefficient();
    closed.push_back({-1, p.branch == Branch::Plus ? -1 : +1, chain_end, true});
    for (int n = n_lo; n <= n_hi_block; ++n)
        for (int sign : {-1, +1})
            closed.push_back({n, sign, energy_deformed(n, sign, p), n <= interior_top});

    for (const ClosedLevel& cl : closed) {
        if (!cl.interior) {
            std::ostringstream os;
            os << "block n=" << cl.n << " sign=" << (cl.sign > 0 ? "+" : "-")
               << " within edge margin";
            report.excluded.push_back(os.str());
            continue;
        }
        size_t best = pairs.size();
        double best_dist = 0.0;
        for (size_t k = 0; k < pairs.size(); ++k) {
            if (used[k])
                continue;
            const double dist = std::abs(pairs[k].value.real() - cl.value);
            if (best == pairs.size() || dist < best_dist) {
                best = k;
                best_dist = dist;
            }
        }
        if (best == pairs.size())
            throw std::runtime_error("numeric_vs_closed: ran out of numeric eigenvalues");
        used[best] = true;
        SpectralRow row;
        row.n = cl.n;
        row.sign = cl.sign;
        row.e_closed = cl.value;
        row.e_numeric = pairs[best].value;
        row.abs_err = std::abs(pairs[best].value - Complex(cl.value, 0.0));
        report.rows.push_back(row);
        report.max_abs_err = std::max(report.max_abs_err, row.abs_err);
        report.max_imag = std::max(report.max_imag, std::abs(pairs[best].value.imag()));
    }
    report.excluded.push_back("truncation-corrupted lone edge level");
    return report;
}

std::vector<Fig1Row> fig1_data(const ModelParams& p, const std::vector<int>& n_list,
                               const std::vector<double>& xi_grid) {
    p.validate();
    const int theta = branch_theta(p.branch);
    const double mc2 = p.mc2();
    std::vector<Fig1Row> rows;
    rows.reserve(n_list.size() * xi_grid.size());
    for (int n : n_list) {
        if (n < branch_n_min(p.branch))
            throw std::domain_error("fig1_data: level below branch minimum");
        for (double xi : xi_grid) {
            if (xi < 0.0)
                throw std::invalid_argument("fig1_data: xi must be >= 0");
            Fig1Row r;
            r.n = n;
            r.xi = xi;
            const double e = mc2 * std::sqrt(1.0 + 4.0 * xi * (n + theta));
            // The gap is evaluated as the closed-form product so the identity
            // E_deformed = E - gap holds to the last bit.
            r.gap = 4.0 * mc2 * xi * p.epsilon * (n + theta);
            r.e_plus = e;
            r.e_minus = -e;
            r.e_plus_deformed = e - r.gap;
            r.e_minus_deformed = -e - r.gap;
            rows.push_back(r);
        }
    }
    return rows;
}

std::vector<double> default_xi_grid() {
    std::vector<double> grid;
    grid.reserve(201);
    for (int i = 0; i <= 200; ++i)
        grid.push_back(static_cast<double>(i) / 100.0);
    return grid;
}

std::vector<int> default_fig1_levels(Branch b) {
    std::vector<int> levels;
    for (int n = branch_n_min(b); levels.size() < 5; ++n)
        levels.push_back(n);
    return levels;
}

} // namespace kjc
