#include "kjc/terms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kjc/fock.hpp"

namespace kjc {

void TermSum::add_word(Complex coeff, SpinSymbol spin, const std::vector<LadderSymbol>& word,
                       int chirality) {
    // Accumulate normal-ordered components (j,k) -> coefficient while reading
    // the word left to right.
    std::map<std::pair<int, int>, Complex> acc;
    acc[{0, 0}] = 1.0;
    auto multiply_raise = [](std::map<std::pair<int, int>, Complex>& in) {
        std::map<std::pair<int, int>, Complex> out;
        for (const auto& [jk, c] : in) {
            const auto [j, k] = jk;
            out[{j + 1, k}] += c; // a^k a+ = a+ a^k + k a^(k-1)
            if (k > 0)
                out[{j, k - 1}] += c * static_cast<double>(k);
        }
        in = std::move(out);
    };
    auto multiply_lower = [](std::map<std::pair<int, int>, Complex>& in) {
        std::map<std::pair<int, int>, Complex> out;
        for (const auto& [jk, c] : in)
            out[{jk.first, jk.second + 1}] += c;
        in = std::move(out);
    };
    for (LadderSymbol sym : word) {
        switch (sym) {
        case LadderSymbol::Raise:
            multiply_raise(acc);
            break;
        case LadderSymbol::Lower:
            multiply_lower(acc);
            break;
        case LadderSymbol::Number:
            multiply_raise(acc);
            multiply_lower(acc);
            break;
        }
    }
    for (const auto& [jk, c] : acc)
        add(coeff * c, spin, jk.first, jk.second, chirality);
}

namespace {

int spin_rank(SpinSymbol s) {
    switch (s) {
    case SpinSymbol::Identity: return 0;
    case SpinSymbol::Z: return 1;
    case SpinSymbol::Plus: return 2;
    case SpinSymbol::Minus: return 3;
    }
    return 4;
}

bool term_before(const Term& a, const Term& b) {
    if (a.chirality != b.chirality)
        return a.chirality < b.chirality;
    if (spin_rank(a.spin) != spin_rank(b.spin))
        return spin_rank(a.spin) < spin_rank(b.spin);
    if (a.j != b.j)
        return a.j < b.j;
    return a.k < b.k;
}

bool same_shape(const Term& a, const Term& b) {
    return a.chirality == b.chirality && a.spin == b.spin && a.j == b.j && a.k == b.k;
}

} // namespace

TermSum canonicalize(const TermSum& ts, double drop_tol) {
    std::vector<Term> sorted = ts.terms;
    for (const Term& t : sorted)
        if (t.j < 0 || t.k < 0)
            throw std::invalid_argument("canonicalize: negative ladder powers");
    std::stable_sort(sorted.begin(), sorted.end(), term_before);
    TermSum out;
    for (const Term& t : sorted) {
        if (!out.terms.empty() && same_shape(out.terms.back(), t))
            out.terms.back().coeff += t.coeff;
        else
            out.add(t);
    }
    auto last = std::remove_if(out.terms.begin(), out.terms.end(), [&](const Term& t) {
        return std::abs(t.coeff) <= drop_tol;
    });
    out.terms.erase(last, out.terms.end());
    return out;
}

bool term_sums_equal(const TermSum& a, const TermSum& b, double tol) {
    const TermSum ca = canonicalize(a, tol);
    const TermSum cb = canonicalize(b, tol);
    if (ca.terms.size() != cb.terms.size())
        return false;
    for (size_t i = 0; i < ca.terms.size(); ++i) {
        if (!same_shape(ca.terms[i], cb.terms[i]))
            return false;
        if (std::abs(ca.terms[i].coeff - cb.terms[i].coeff) > tol)
            return false;
    }
    return true;
}

std::string to_string(SpinSymbol s) {
    switch (s) {
    case SpinSymbol::Identity: return "1";
    case SpinSymbol::Z: return "sz";
    case SpinSymbol::Plus: return "s+";
    case SpinSymbol::Minus: return "s-";
    }
    return "?";
}

std::string to_string(const TermSum& ts) {
    std::ostringstream os;
    bool first = true;
    for (const Term& t : ts.terms) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << t.coeff.real();
        if (t.coeff.imag() >= 0.0)
            os << "+" << t.coeff.imag() << "i";
        else
            os << t.coeff.imag() << "i";
        os << ")*" << to_string(t.spin);
        for (int p = 0; p < t.j; ++p)
            os << "*a+";
        for (int p = 0; p < t.k; ++p)
            os << "*a-";
        os << "[" << (t.chirality > 0 ? "+s" : "-s") << "]";
    }
    if (first)
        os << "0";
    return os.str();
}

namespace {

Matrix spin_matrix(SpinSymbol s) {
    switch (s) {
    case SpinSymbol::Identity: return pauli(PauliKind::Identity);
    case SpinSymbol::Z: return pauli(PauliKind::Z);
    case SpinSymbol::Plus: return pauli(PauliKind::Plus);
    case SpinSymbol::Minus: return pauli(PauliKind::Minus);
    }
    throw std::logic_error("spin_matrix: bad symbol");
}

Matrix ladder_power(const Matrix& raise, const Matrix& lower, int j, int k) {
    Matrix m = Matrix::Identity(raise.rows(), raise.cols());
    for (int p = 0; p < j; ++p)
        m = raise * m;
    Matrix low = Matrix::Identity(raise.rows(), raise.cols());
    for (int p = 0; p < k; ++p)
        low = lower * low;
    return m * low;
}

} // namespace

Matrix realize_composite(const TermSum& ts, int n_max) {
    const CompositeBasis basis(n_max);
    const Matrix raise = creation_operator(n_max);
    const Matrix lower = annihilation_operator(n_max);
    Matrix h = Matrix::Zero(basis.dim(), basis.dim());
    for (const Term& t : canonicalize(ts).terms)
        h += t.coeff * spin_fock_kron(spin_matrix(t.spin), ladder_power(raise, lower, t.j, t.k));
    return h;
}

Matrix realize_two_mode(const TermSum& ts, int n_max) {
    const int fd = n_max + 1;
    const Matrix raise = creation_operator(n_max);
    const Matrix lower = annihilation_operator(n_max);
    const Matrix fock_id = fock_identity(n_max);
    const int dim = 2 * fd * fd;
    Matrix h = Matrix::Zero(dim, dim);
    auto kron = [](const Matrix& a, const Matrix& b) {
        Matrix out = Matrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.cols(); ++c)
                if (a(r, c) != Complex(0.0, 0.0))
                    out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        return out;
    };
    for (const Term& t : canonicalize(ts).terms) {
        const Matrix word = ladder_power(raise, lower, t.j, t.k);
        const Matrix mode_part =
            t.chirality > 0 ? kron(word, fock_id) : kron(fock_id, word);
        h += t.coeff * kron(spin_matrix(t.spin), mode_part);
    }
    return h;
}

} // namespace kjc
