#pragma once

// The straightening (normal ordering) engine for a modified quantized
// matrix algebra M_q^wp(n).  Rewrites arbitrary words in the generators
// into the lexicographic PBW normal form using the inverted defining
// relations; the correction term of the (i<s, j<t) case is itself already
// ordered, so the rewriting terminates (the multiset of antidiagonal
// levels i+j decreases lexicographically, ties broken by inversions).

#include <optional>

#include "qma/ncpoly.hpp"

namespace qma {

class Engine {
public:
  explicit Engine(AlgebraSpec spec, bool with_L = false, bool tensor = false);

  const AlgebraSpec &spec() const { return spec_; }
  int n() const { return spec_.n; }
  bool with_L() const { return with_L_; }
  bool tensor() const { return tensor_; }
  int num_l() const { return with_L_ ? 2 * spec_.n - 1 : 0; }

  NCPoly one() const;
  NCPoly gen(int i, int j, int slot = 0) const;
  NCPoly lgen(int k, long e = 1, int slot = 0) const;
  NCPoly from_word(const Word &w, Laurent coeff = Laurent(1)) const { return straighten(w, coeff); }

  NCPoly straighten(const Word &w, Laurent coeff = Laurent(1)) const;
  NCPoly multiply(const NCPoly &p, const NCPoly &q) const;
  NCPoly commutator(const NCPoly &p, const NCPoly &q) const;
  // Noncommutative power by iterated multiplication; negative k is allowed
  // only for a single L-monomial.
  NCPoly power(const NCPoly &p, long k) const;

  // n_{i,j} with P Z_{i,j} = q^{n_{i,j}} Z_{i,j} P for every generator,
  // or nullopt when P is not covariant.  P must be nonzero.
  std::optional<std::map<std::pair<int, int>, long>> covariance_check(const NCPoly &p) const;

  // True iff [P, g] vanishes for every generator g (including the L_k when
  // the engine carries them), exactly for generic q, or after specializing
  // the coefficients at zeta_m when m is given.
  bool central_check(const NCPoly &p, std::optional<unsigned> m = std::nullopt) const;

  // In the quasipolynomial algebra, x_{s,t} x^B = q^E x^B x_{s,t};
  // B is a row-major n*n exponent matrix.
  long monomial_exchange_exponent(const std::vector<int> &B, GenPos st) const;

  // Expansion of an ordered monomial back into letters, canonical order.
  Word letters_of(const Monomial &m) const;

  Monomial scalar_monomial() const;
  long pair_l_z(int k, int i, int j) const { return lz_[k][zidx(i, j)]; }

private:
  struct SwapRule {
    long h = 0;        // x_a x_b = q^{-h} x_b x_a - correction, for a >lex b
    bool corr = false; // correction present iff b.i < a.i and b.j < a.j
    long hx = 0;       // extra exponent of the correction
    int c1i = 0, c1j = 0, c2i = 0, c2j = 0;
  };

  int zidx(int i, int j) const { return (i - 1) * spec_.n + (j - 1); }
  const SwapRule &rule(int xi, int xj, int yi, int yj) const; // (xi,xj) >lex (yi,yj)
  int letter_rank(const Letter &l) const;

  AlgebraSpec spec_;
  bool with_L_, tensor_;
  std::vector<SwapRule> rules_;       // indexed by zidx(x)*n^2 + zidx(y)
  std::vector<std::vector<long>> lz_; // (lambda_k | alpha_{i,j})
};

} // namespace qma
