#pragma once

// Root and weight bookkeeping for A_{2n-1}: the simple roots
// beta, mu_1..mu_{n-1}, nu_1..nu_{n-1}, integer weights in the
// fundamental-weight basis, the modification vectors (zeta, xi),
// and the q-exponents of the quadratic relations.
//
// Weight coordinates are stored in the fixed order
//   [beta, mu_1, ..., mu_{n-1}, nu_1, ..., nu_{n-1}]   (length 2n-1).

#include <string>
#include <vector>

#include "qma/rational.hpp"

namespace qma {

enum class Family { standard, dipper, j0, jz, jn, custom };

std::string family_name(Family f);
Family family_from_name(const std::string &s);

struct Weight {
  std::vector<long> c; // length 2n-1

  Weight() = default;
  explicit Weight(int n) : c(2 * n - 1, 0) {}

  static Weight lambda_beta(int n) { Weight w(n); w.c[0] = 1; return w; }
  // lambda_mu_k / lambda_nu_k for 1 <= k <= n; k = n denotes the zero weight
  // (the convention that makes the corresponding multiplier trivial).
  static Weight lambda_mu(int n, int k);
  static Weight lambda_nu(int n, int k);

  Weight operator+(const Weight &o) const;
  Weight operator-() const;
  Weight scaled(long t) const;
  bool operator==(const Weight &o) const { return c == o.c; }
};

// Index pair of a generator Z_{i,j}, 1-based.
struct GenPos {
  int i = 1, j = 1;
  bool operator==(const GenPos &o) const { return i == o.i && j == o.j; }
  bool operator!=(const GenPos &o) const { return !(*this == o); }
  // lexicographic order on (i, j), the PBW order of the whole workbench
  bool operator<(const GenPos &o) const { return i != o.i ? i < o.i : j < o.j; }
};

// Support of the root alpha_{i,j} = beta + mu_1+..+mu_{i-1} + nu_1+..+nu_{j-1}
// as a set of simple-root labels; used for the delta pairing with weights.
struct RootSupport {
  int n = 0;
  std::vector<int> indices; // positions into the weight coordinate vector

  static RootSupport alpha(int n, int i, int j);
};

// (sum of simple roots in `alpha` | w); A_{2n-1} is simply laced, all d_i = 1.
long pairing(const RootSupport &alpha, const Weight &w);

// (alpha_{i,j} | w), the pairing used by the relation exponents.
long pairing_alpha(int n, int i, int j, const Weight &w);

struct AlgebraSpec {
  int n = 2;
  Family family = Family::standard;
  std::vector<Weight> zetas, xis; // n each

  static AlgebraSpec make(Family f, int n);
  static AlgebraSpec custom(int n, std::vector<Weight> zetas, std::vector<Weight> xis);
};

// The modification vector that realizes a named family inside U_q(A_{2n-1}):
//   standard: all zero
//   dipper:   zeta_i = -lambda_mu_i,              xi_j = +lambda_nu_j
//   j0:       zeta_i = -i lambda_beta - lambda_mu_i, xi_j = -j lambda_beta - lambda_nu_j
//   jz:       zeta_i = -lambda_mu_i,              xi_j = -lambda_nu_j
//   jn:       zeta_i = -i lambda_beta - lambda_mu_i, xi_j = +j lambda_beta + lambda_nu_j
void family_to_wp(Family f, int n, std::vector<Weight> &zetas, std::vector<Weight> &xis);

// Exponent h with x_{a} x_{b} = q^h x_{b} x_{a} in the quasipolynomial
// algebra, a = (i,j) lexicographically before b = (s,t); antisymmetric
// under swapping the arguments.  Four cases:
//   same row,    j<k:  (a_{i,k}|z_i+x_j) - (a_{i,j}|z_i+x_k) + 1
//   same column, i<k:  (a_{k,j}|z_i+x_j) - (a_{i,j}|z_k+x_j) + 1
//   i<s, t<j  and  i<s, j<t:  (a_{s,t}|z_i+x_j) - (a_{i,j}|z_s+x_t)
long exchange_exponent(const AlgebraSpec &spec, GenPos a, GenPos b);

// Exponent h' on the quadratic correction term
// (q - q^{-1}) q^{h'} Z_{i,t} Z_{s,j}, defined for i < s and j < t:
//   h' = (a_{s,t}|z_i+x_j) - (a_{s,j}|z_i+x_t)
long extra_exponent(const AlgebraSpec &spec, GenPos a, GenPos b);

} // namespace qma
