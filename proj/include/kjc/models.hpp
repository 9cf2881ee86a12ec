#pragma once

#include "kjc/params.hpp"
#include "kjc/terms.hpp"

namespace kjc {

// Undeformed Hamiltonians. JC: H = hbar(g a+ s- + g* a- s+) + delta*sz.
// Anti-JC: H = hbar(g a+ s+ + g* a- s-) + delta*sz, mode tag -s.
TermSum terms_jc(const ModelParams& p);
TermSum terms_ajc(const ModelParams& p);

// Deformed Hamiltonian for the branch selected in p:
//   H = hbar(g a+ s_drop mu_drop + g* a- s_raise mu_raise)
//       + delta_eps*sz + C*(2N+1)*1
// where for the plus branch s_drop = s-, mu_drop = 1-eps (and mu_raise =
// 1+eps), and for the minus branch s_drop = s+, mu_drop = 1+eps. C follows
// p.convention. Non-Hermitian for eps > 0.
TermSum terms_kappa(const ModelParams& p);

// Hermitian counterpart quoted for the plus branch, verbatim:
//   h = hbar(g s- a+ + g* s+ a-) + (1-2 eps xi) delta sz
//       + eps hbar (g s- a- + g* s+ a+) + m c^2 eps xi (2N+1) 1
// (note the identity coefficient and the eps cross-term factor differ from
// what the numeric similarity transform produces; the audit quantifies both).
TermSum terms_hermitian_printed(const ModelParams& p);

Matrix build_jc(const ModelParams& p, int n_max);
Matrix build_ajc(const ModelParams& p, int n_max);
Matrix build_kappa(const ModelParams& p, int n_max);
Matrix build_hermitian_printed(const ModelParams& p, int n_max);

} // namespace kjc
