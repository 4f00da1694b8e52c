#pragma once

// Semiclassical Poisson structures on M(n, C): the rescaled-commutator
// oracle (limit of [Z^m, Z^m] / (m(q^m-1)) at zeta_m), bracket tables per
// modification,
// Jacobi verification, the classical minor-bracket lemmas and minor-ideal
// membership, symplectic leaf dimensions via L_omega, and the Poisson
// multiplicativity of matrix multiplication.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qma/engine.hpp"

namespace qma {

struct NonCentralResidue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Commutative polynomials in the matrix entries a_{ij}, an optional second
// matrix copy b_{ij}, and optional invertible scale symbols.  Exponent layout:
// [a (n*n) | b (n*n) if doubled | scales (2n) if enabled], scale exponents
// may be negative.
struct PVars {
  int n = 2;
  bool doubled = false;
  bool scales = false;
  int count() const { return n * n * (doubled ? 2 : 1) + (scales ? 2 * n : 0); }
  int a(int i, int j) const { return (i - 1) * n + (j - 1); }
  int b(int i, int j) const { return n * n + (i - 1) * n + (j - 1); }
  int psi(int i) const { return n * n * (doubled ? 2 : 1) + (i - 1); }
  int phi(int j) const { return n * n * (doubled ? 2 : 1) + n + (j - 1); }
};

using PMono = std::vector<int>;
using PPoly = std::map<PMono, Rat>;

PPoly p_zero();
PPoly p_var(const PVars &v, int idx);
void p_add(PPoly &p, const PMono &m, const Rat &c);
PPoly p_sum(const PPoly &x, const PPoly &y);
PPoly p_diff(const PPoly &x, const PPoly &y);
PPoly p_mul(const PPoly &x, const PPoly &y);
PPoly p_scale(const PPoly &x, const Rat &c);
PPoly p_derivative(const PPoly &x, int idx);

// {a_ij, a_st}_wp = Psi(lim_{q->zeta_m} [Z~_ij^m, Z~_st^m] / (m(q^m-1))),
// computed exactly in the engine; every surviving monomial must have all
// exponents divisible by m (else NonCentralResidue) and a rational limit.
PPoly semiclassical_bracket(const Engine &e, unsigned m, GenPos x, GenPos y);

struct BracketTable {
  int n = 2;
  // key: pair of generator indices (lex ordered); value: the bracket
  std::map<std::pair<int, int>, PPoly> entries;
  PVars vars;

  const PPoly *find(int gx, int gy) const; // nullptr when gx == gy
};

BracketTable bracket_table(const Engine &e, unsigned m); // verifies Jacobi

// Leibniz extension of the table to arbitrary polynomials.
PPoly poisson_bracket(const BracketTable &t, const PPoly &f, const PPoly &g);

bool jacobi_holds(const BracketTable &t);

// The standard bracket table cases for wp = 0 (row / column / vanishing)
// and the verdict on the two candidate readings of the fourth case.
struct OracleVerdict {
  bool row_col_match = false;   // {Z_ij,Z_ik} = Z_ik Z_ij and column analog
  bool vanishing_match = false; // {Z_ij,Z_st} = 0 for i<s, t<j
  bool fourth_is_classical = false; // {Z_ij,Z_st} = 2 a_it a_sj for i<s, j<t
  bool fourth_is_displayed = false; // {Z_ij,Z_st} = 2 a_st a_ij (commonly displayed)
};
OracleVerdict oracle_verdict(int n, unsigned m);

// classical cofactor (minor determinant of the complement, with sign pattern
// handled by the caller) and determinant as commutative polynomials
PPoly classical_minor(const PVars &v, const std::vector<int> &rows, const std::vector<int> &cols,
                      bool second_copy = false);
PPoly classical_det(const PVars &v, int n);

struct MinorIdealReport {
  bool lemma1 = false; // {Z_ij, A^i_j} expansion
  bool lemma2 = false; // {Z_ij, A^n_j} expansion
  bool ideal = false;  // {a_st, M} in the 2x2 minor ideal, all st, M
};
MinorIdealReport minor_ideal_check(int n);

// --- symplectic leaf dimensions -----------------------------------------

struct WeylElement {
  std::vector<int> perm; // 1-based images
  long length() const;
  static WeylElement longest(int n);
};

// L_omega(a) = T_R(w^-1 a w) + w^-1 T_L(a) w on the diagonal subalgebra,
// with (x_k, y_k) the modified dressing fields of the family.
std::vector<std::vector<Rat>> l_omega_matrix(Family f, int n, const WeylElement &w);
int l_omega_rank(Family f, int n, const WeylElement &w);
long leaf_dimension(Family f, int n, const WeylElement &w);

// {f . mu, g . mu}_{product} = {f, g}_{target} . mu for matrix multiplication
// mu, with the product structure the direct sum of the two tables.
bool poisson_multiplicativity_check(const BracketTable &left, const BracketTable &right,
                                    const BracketTable &target);

// rescaling a_ij -> c^{(alpha_ij | lambda)} a_ij maps the table to itself
bool smult_covariance(const BracketTable &t, const AlgebraSpec &spec);

// the wp table equals the wp=0 table in the coordinates a_ij psi_i phi_j,
// with the scale symbols bracketing as {psi_i, a_st} = (zeta_i|alpha_st) a_st psi_i
bool loaf_coordinate_change_check(const AlgebraSpec &spec, unsigned m);

} // namespace qma
