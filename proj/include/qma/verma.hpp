#pragma once

// Restricted Verma modules (highest-weight theory along the opposite
// diagonal) and the minimally generalized Verma module of J0, with exact
// matrix representations over Q(zeta_m), relation verification and a
// Burnside irreducibility test.

#include <optional>

#include "qma/engine.hpp"

namespace qma {

struct ConditionCommuFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModuleRep {
  AlgebraSpec spec;
  unsigned m = 3;
  long dim = 0;
  std::vector<int> raising;   // raising positions (i+j <= n) as zidx, lex order
  std::vector<long> bounds;   // exponent bound per raising position
  std::vector<std::vector<Cyc>> mats; // per generator zidx, dim x dim row-major
  // action: (g . v_c) = sum_r mats[g][r * dim + c] v_r
};

// Basis: all exponent vectors below `bounds` over the raising generators;
// the cyclic vector is killed by the lowering zone (i+j >= n+2), the
// opposite diagonal acts by the scalars lambda_k, and raising overflow
// vanishes by the root-of-unity power lemma.  Requires the opposite-diagonal
// generators to commute; m >= 3.
ModuleRep build_restricted_verma(const AlgebraSpec &spec, unsigned m, std::vector<Cyc> lambda);

// As restricted, but for J0 the generator (n-1, 1) is truncated by
// Z^m = phi instead of Z^{m'} = 0; dimension m (m')^{(n^2-n-2)/2}.
ModuleRep build_min_generalized_verma_j0(int n, unsigned m, std::vector<Cyc> lambda, Cyc phi);

// every defining relation of the algebra, specialized at zeta_m, holds as a
// matrix identity
bool verify_rep(const ModuleRep &rep);

// Burnside: the span of all products of action matrices (seeded with the
// identity) has dimension dim^2.  Exact over Q(zeta_m) for small modules; a
// finite-field specialization proves fullness for larger ones and falls back
// to the exact computation when inconclusive.
bool irreducible(const ModuleRep &rep);

// action matrix of the opposite-diagonal generator Z_{k, n+1-k}
const std::vector<Cyc> &diagonal_action(const ModuleRep &rep, int k);

bool matrix_invertible(const ModuleRep &rep, int gen_zidx);

// index of the basis vector Z_{n-1,1}^e . v in the module's basis
long basis_index_of_power(const ModuleRep &rep, int zidx, long e);

} // namespace qma
