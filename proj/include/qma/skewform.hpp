#pragma once

// Integer skew-symmetric defining matrices of the quasipolynomial algebras,
// their block-diagonal canonical forms under unimodular congruence
// W M W^t = diag(S(m_1), ..., S(m_N), 0, ..., 0) with S(m) = [[0,-m],[m,0]],
// ranks, and De Concini-Procesi degrees at roots of unity.

#include <string>
#include <vector>

#include "qma/rational.hpp"
#include "qma/rootdata.hpp"

namespace qma {

struct SkewIntMatrix {
  int N = 0;
  std::vector<Int> a; // row-major

  Int &at(int i, int j) { return a[size_t(i) * N + j]; }
  const Int &at(int i, int j) const { return a[size_t(i) * N + j]; }

  static SkewIntMatrix zero(int N) {
    SkewIntMatrix m;
    m.N = N;
    m.a.assign(size_t(N) * N, Int(0));
    return m;
  }
  bool is_skew() const;
};

struct CanonicalForm {
  std::vector<Int> blocks; // positive, divisor chain m_1 | m_2 | ...
  int zeros = 0;
  std::vector<Int> W; // N x N unimodular certificate, row-major
  int N = 0;

  const Int &w(int i, int j) const { return W[size_t(i) * N + j]; }
};

// Defining matrix: h_{[i,j],[s,t]} = exchange_exponent((i,j),(s,t)) on the
// Z block (row-major generator order); with_L appends 2n-1 rows/columns for
// the L_k with h_{L_k,[i,j]} = (lambda_k | alpha_{i,j}) and zero L-L block.
// Row layout: Z generators first, then L_k in the weight coordinate order.
SkewIntMatrix defining_matrix(const AlgebraSpec &spec, bool with_L = false);

// Defining matrix of the Dipper-Donkin algebra D_q(n) itself, read off its
// presentation: D_ij D_st = q D_st D_ij for i>s, j<=t, rows commute.  The
// wp-realization inside U_q is D_{q^{-2}}(n) transposed, so its defining
// matrix is this one doubled (up to congruence); the degree closed form
// m^[n^2/2] concerns this matrix.
SkewIntMatrix dipper_donkin_matrix(int n);

// Certified canonical form; verifies W M W^t equals the block form before
// returning.
CanonicalForm skew_normal_form(const SkewIntMatrix &M);

int rank(const SkewIntMatrix &M);

// Product over canonical blocks of m / gcd(m, m_i).
Int degree_at(const SkewIntMatrix &M, long m);

long mprime(long m); // m if odd, m/2 if even

struct ClaimResult {
  std::string claim;
  std::string tag; // claim label
  bool pass = false;
  std::string detail;
};

// Recompute blocks / rank / degree for a named family and compare against
// the expected closed forms.
std::vector<ClaimResult> verify_canonical_theorems(Family f, int n, const std::vector<long> &ms);

} // namespace qma
