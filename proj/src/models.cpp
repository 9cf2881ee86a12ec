#include "kjc/models.hpp"

namespace kjc {

namespace {

// Couplings carry the mode tag of the branch: +s for JC, -s for anti-JC.
int mode_tag(const ModelParams& p) { return p.branch == Branch::Plus ? p.s : -p.s; }

} // namespace

TermSum terms_jc(const ModelParams& p) {
    p.validate();
    const Complex hg = p.hbar * p.coupling_g();
    TermSum ts;
    ts.add(hg, SpinSymbol::Minus, 1, 0, p.s);
    ts.add(std::conj(hg), SpinSymbol::Plus, 0, 1, p.s);
    ts.add(p.detuning(), SpinSymbol::Z, 0, 0, p.s);
    return canonicalize(ts);
}

TermSum terms_ajc(const ModelParams& p) {
    p.validate();
    const Complex hg = p.hbar * p.coupling_g();
    TermSum ts;
    ts.add(hg, SpinSymbol::Plus, 1, 0, -p.s);
    ts.add(std::conj(hg), SpinSymbol::Minus, 0, 1, -p.s);
    ts.add(p.detuning(), SpinSymbol::Z, 0, 0, -p.s);
    return canonicalize(ts);
}

TermSum terms_kappa(const ModelParams& p) {
    p.validate();
    const Complex hg = p.hbar * p.coupling_g();
    const int tag = mode_tag(p);
    const bool plus = p.branch == Branch::Plus;
    // Raising coupling pairs with s- (JC) or s+ (anti-JC); the deformation
    // factor 1 -+ eps rides with the raising term on the plus branch and the
    // lowering term on the minus branch.
    const double mu_raise_term = plus ? p.mu_minus() : p.mu_plus();
    const double mu_lower_term = plus ? p.mu_plus() : p.mu_minus();
    const double c_id = p.identity_coefficient();
    TermSum ts;
    ts.add(hg * mu_raise_term, plus ? SpinSymbol::Minus : SpinSymbol::Plus, 1, 0, tag);
    ts.add(std::conj(hg) * mu_lower_term, plus ? SpinSymbol::Plus : SpinSymbol::Minus, 0, 1, tag);
    ts.add(p.delta_eps(), SpinSymbol::Z, 0, 0, tag);
    ts.add(2.0 * c_id, SpinSymbol::Identity, 1, 1, tag); // 2C*N
    ts.add(c_id, SpinSymbol::Identity, 0, 0, tag);       // C*1
    return canonicalize(ts);
}

TermSum terms_hermitian_printed(const ModelParams& p) {
    p.validate();
    if (p.branch != Branch::Plus)
        throw std::invalid_argument(
            "terms_hermitian_printed: quoted for the plus (JC) branch only");
    const Complex hg = p.hbar * p.coupling_g();
    const double xw = p.epsilon * p.xi();
    const double c_id = p.mc2() * xw; // m c^2 eps xi, as quoted
    TermSum ts;
    ts.add(hg, SpinSymbol::Minus, 1, 0, p.s);
    ts.add(std::conj(hg), SpinSymbol::Plus, 0, 1, p.s);
    ts.add((1.0 - 2.0 * xw) * p.detuning(), SpinSymbol::Z, 0, 0, p.s);
    ts.add(p.epsilon * hg, SpinSymbol::Minus, 0, 1, p.s);
    ts.add(p.epsilon * std::conj(hg), SpinSymbol::Plus, 1, 0, p.s);
    ts.add(2.0 * c_id, SpinSymbol::Identity, 1, 1, p.s);
    ts.add(c_id, SpinSymbol::Identity, 0, 0, p.s);
    return canonicalize(ts);
}

Matrix build_jc(const ModelParams& p, int n_max) { return realize_composite(terms_jc(p), n_max); }

Matrix build_ajc(const ModelParams& p, int n_max) {
    return realize_composite(terms_ajc(p), n_max);
}

Matrix build_kappa(const ModelParams& p, int n_max) {
    return realize_composite(terms_kappa(p), n_max);
}

Matrix build_hermitian_printed(const ModelParams& p, int n_max) {
    return realize_composite(terms_hermitian_printed(p), n_max);
}

} // namespace kjc
