#pragma once

// The extended algebra A_n = C[L_1^{+-1},...,L_{2n-1}^{+-1}] x_s M_q^wp(n):
// its defining matrix (delegated to skewform), the coproduct structure on
// the standard member, and the Delta(Z^m) power identity at roots of unity,
// all checked in the two-slot tensor engine.

#include "qma/engine.hpp"
#include "qma/skewform.hpp"

namespace qma {

// (n^2 + 2n - 1)-dimensional defining matrix of the extended algebra
SkewIntMatrix extended_defining_matrix(const AlgebraSpec &spec);

struct CoproductRule {
  long a = 1, b = 0; // Delta(L_beta) = L_beta^a (x) L_beta^b, a + b = 1
};

// Delta(Z_ij) = sum_k Z_ik (x) Z_kj, Delta(L_mu_i) = L_mu_i (x) 1,
// Delta(L_nu_j) = 1 (x) L_nu_j, Delta(L_beta) = L_beta^a (x) L_beta^b.
// Checks that Delta and the counit eps(Z_ij) = delta_ij, eps(L) = 1 send
// every defining relation of A_n to zero, the counit axioms on generators,
// and coassociativity on generators.  True only when a + b = 1.
bool coproduct_check(int n, const CoproductRule &rule);

// Delta(Z_ij^m) = sum_k Z_ik^m (x) Z_kj^m at zeta_m (all i, j)
bool coproduct_power_check(int n, unsigned m);
// the same identity fails for generic q
bool coproduct_power_generic_fails(int n, unsigned m);

// Named-family cross sections: Z~_ij = Z_ij L_{zeta_i} L_{xi_j} computed in
// the extended standard engine satisfies the family's relations.
bool cross_section_check(Family f, int n);

} // namespace qma
