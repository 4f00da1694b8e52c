#pragma once

// Ordered monomials and noncommutative polynomials in the generators
// Z_{i,j}, optionally extended by the invertible generators L_k and by a
// second tensor slot.  Reading order of an ordered monomial:
// slot 1 before slot 2; within a slot, L-part before Z-part; Z-part in
// lexicographic order of (i, j).

#include <compare>
#include <map>
#include <vector>

#include "qma/cyclotomic.hpp"
#include "qma/laurent.hpp"
#include "qma/rootdata.hpp"

namespace qma {

struct Monomial {
  std::vector<long> l1, l2; // L exponents, length 2n-1 (empty when unused)
  std::vector<int> z1, z2;  // Z exponents, row-major n*n (z2 empty unless tensor)

  auto operator<=>(const Monomial &) const = default;

  long z_degree() const {
    long d = 0;
    for (int e : z1) d += e;
    for (int e : z2) d += e;
    return d;
  }
  bool is_scalar() const {
    for (long e : l1) if (e) return false;
    for (long e : l2) if (e) return false;
    for (int e : z1) if (e) return false;
    for (int e : z2) if (e) return false;
    return true;
  }
};

// A single generator occurrence in a word.  Z letters always carry
// exponent +1; L letters carry an arbitrary nonzero integer exponent.
struct Letter {
  int slot = 0;   // 0 or 1 (tensor factor)
  bool is_l = false;
  int i = 0, j = 0; // Z indices, 1-based
  int k = 0;        // L index, 0-based into the weight coordinate order
  long e = 1;       // L exponent

  static Letter Z(int i, int j, int slot = 0) {
    Letter l; l.slot = slot; l.is_l = false; l.i = i; l.j = j; return l;
  }
  static Letter L(int k, long e = 1, int slot = 0) {
    Letter l; l.slot = slot; l.is_l = true; l.k = k; l.e = e; return l;
  }
};

using Word = std::vector<Letter>;

using NCPoly = std::map<Monomial, Laurent>;
using NCPolyCyc = std::map<Monomial, Cyc>;

inline void nc_add(NCPoly &p, const Monomial &m, const Laurent &c) {
  if (c.is_zero()) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline NCPoly nc_sum(const NCPoly &a, const NCPoly &b) {
  NCPoly r = a;
  for (const auto &[m, c] : b) nc_add(r, m, c);
  return r;
}

inline NCPoly nc_diff(const NCPoly &a, const NCPoly &b) {
  NCPoly r = a;
  for (const auto &[m, c] : b) nc_add(r, m, -c);
  return r;
}

inline NCPoly nc_scale(const NCPoly &a, const Laurent &c) {
  NCPoly r;
  for (const auto &[m, co] : a) nc_add(r, m, co * c);
  return r;
}

// Coefficientwise specialization q -> zeta_m; zero terms dropped.
inline NCPolyCyc nc_specialize(const NCPoly &a, unsigned m) {
  NCPolyCyc r;
  for (const auto &[mono, c] : a) {
    Cyc v = specialize(c, m);
    if (!v.is_zero()) r.emplace(mono, v);
  }
  return r;
}

} // namespace qma
