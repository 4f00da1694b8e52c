#include "qma/semidirect.hpp"

namespace qma {

SkewIntMatrix extended_defining_matrix(const AlgebraSpec &spec) {
  return defining_matrix(spec, /*with_L=*/true);
}

namespace {

// Delta images inside the two-slot tensor engine over the extended standard
// algebra.  L indices: 0 = beta, 1..n-1 = mu_k, n..2n-2 = nu_k.
struct Coproduct {
  const Engine &e;
  CoproductRule rule;

  NCPoly z(int i, int j) const {
    NCPoly out;
    for (int al = 1; al <= e.n(); ++al) {
      Monomial m = e.scalar_monomial();
      m.z1[(i - 1) * e.n() + (al - 1)] = 1;
      m.z2[(al - 1) * e.n() + (j - 1)] = 1;
      nc_add(out, m, Laurent(1));
    }
    return out;
  }

  NCPoly l(int k) const { // Delta(L_k)
    Monomial m = e.scalar_monomial();
    const int n = e.n();
    if (k == 0) {
      m.l1[0] = rule.a;
      m.l2[0] = rule.b;
    } else if (k <= n - 1) {
      m.l1[k] = 1; // L_mu (x) 1
    } else {
      m.l2[k] = 1; // 1 (x) L_nu
    }
    NCPoly out;
    nc_add(out, m, Laurent(1));
    return out;
  }
};

} // namespace

bool coproduct_check(int n, const CoproductRule &rule) {
  Engine e(AlgebraSpec::make(Family::standard, n), /*with_L=*/true, /*tensor=*/true);
  Coproduct cp{e, rule};
  const AlgebraSpec &spec = e.spec();

  // Delta sends every defining relation of A_n to zero
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          GenPos a{i, j}, b{s, t};
          if (!(a < b)) continue;
          long h = exchange_exponent(spec, a, b);
          NCPoly lhs = e.multiply(cp.z(i, j), cp.z(s, t));
          NCPoly rhs = nc_scale(e.multiply(cp.z(s, t), cp.z(i, j)), Laurent::q_power(h));
          if (a.i < b.i && a.j < b.j) {
            long hx = extra_exponent(spec, a, b);
            rhs = nc_sum(rhs, nc_scale(e.multiply(cp.z(i, t), cp.z(s, j)),
                                       Laurent::q_minus_qinv() * Laurent::q_power(hx)));
          }
          if (lhs != rhs) return false;
        }
  for (int k = 0; k < 2 * n - 1; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        // L_k Z_ij = q^{(lambda_k|alpha_ij)} Z_ij L_k
        NCPoly lhs = e.multiply(cp.l(k), cp.z(i, j));
        NCPoly rhs = nc_scale(e.multiply(cp.z(i, j), cp.l(k)),
                              Laurent::q_power(e.pair_l_z(k, i, j)));
        if (lhs != rhs) return false;
      }

  // counit axioms on the matrix generators:
  // (eps (x) id) Delta(Z_ij) = Z_ij = (id (x) eps) Delta(Z_ij)
  // with eps(Z_ij) = delta_ij, eps(L) = 1.  (On the L-part the strict axiom
  // does not hold for any split; see the workbench notes.)
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      // slot-1 counit: sum_al delta_{i,al} Z_{al,j} = Z_ij, and symmetrically
      // for slot 2; with Delta as above this is the al = i (al = j) term.
      // Verified structurally on the expansion of cp.z:
      NCPoly dz = cp.z(i, j);
      // (eps (x) id): keep terms whose slot-1 z-part is a single Z_{i,i}
      NCPoly left, right;
      for (const auto &[m, c] : dz) {
        Monomial m1 = e.scalar_monomial();
        bool diag1 = true, diag2 = true;
        for (int u = 1; u <= n && diag1; ++u)
          for (int v = 1; v <= n; ++v)
            if (m.z1[(u - 1) * n + (v - 1)] != 0 && u != v) { diag1 = false; break; }
        for (int u = 1; u <= n && diag2; ++u)
          for (int v = 1; v <= n; ++v)
            if (m.z2[(u - 1) * n + (v - 1)] != 0 && u != v) { diag2 = false; break; }
        if (diag1) {
          Monomial keep = m1;
          keep.z1 = m.z2;
          nc_add(left, keep, c);
        }
        if (diag2) {
          Monomial keep = m1;
          keep.z1 = m.z1;
          nc_add(right, keep, c);
        }
      }
      Monomial expect = e.scalar_monomial();
      expect.z1[(i - 1) * n + (j - 1)] = 1;
      NCPoly want;
      nc_add(want, expect, Laurent(1));
      if (left != want || right != want) return false;
    }

  // coassociativity on generators: for the Z_ij both sides are
  // sum Z_ia (x) Z_ab (x) Z_bj structurally; for L_beta it needs a^2 = a,
  // b^2 = b, i.e. the split must be (1,0) or (0,1)
  if (rule.a * rule.a != rule.a || rule.b * rule.b != rule.b) return false;
  return true;
}

bool coproduct_power_check(int n, unsigned m) {
  Engine e(AlgebraSpec::make(Family::standard, n), true, true);
  Coproduct cp{e, CoproductRule{1, 0}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly lhs = e.power(cp.z(i, j), (long)m);
      NCPoly rhs;
      for (int al = 1; al <= n; ++al) {
        Monomial mo = e.scalar_monomial();
        mo.z1[(i - 1) * n + (al - 1)] = (int)m;
        mo.z2[(al - 1) * n + (j - 1)] = (int)m;
        nc_add(rhs, mo, Laurent(1));
      }
      if (!(nc_specialize(lhs, m) == nc_specialize(rhs, m))) return false;
    }
  return true;
}

bool coproduct_power_generic_fails(int n, unsigned m) {
  Engine e(AlgebraSpec::make(Family::standard, n), true, true);
  Coproduct cp{e, CoproductRule{1, 0}};
  NCPoly lhs = e.power(cp.z(1, 1), (long)m);
  NCPoly rhs;
  for (int al = 1; al <= n; ++al) {
    Monomial mo = e.scalar_monomial();
    mo.z1[al - 1] = (int)m;
    mo.z2[(al - 1) * n] = (int)m;
    nc_add(rhs, mo, Laurent(1));
  }
  return !(lhs == rhs);
}

bool cross_section_check(Family f, int n) {
  AlgebraSpec family = AlgebraSpec::make(f, n);
  Engine e(AlgebraSpec::make(Family::standard, n), /*with_L=*/true);

  auto modified = [&](int i, int j) {
    Word w;
    w.push_back(Letter::Z(i, j));
    for (int k = 0; k < 2 * n - 1; ++k) {
      long c = family.zetas[i - 1].c[k] + family.xis[j - 1].c[k];
      if (c != 0) w.push_back(Letter::L(k, c));
    }
    return e.straighten(w);
  };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          GenPos a{i, j}, b{s, t};
          if (!(a < b)) continue;
          long h = exchange_exponent(family, a, b);
          NCPoly lhs = e.multiply(modified(i, j), modified(s, t));
          NCPoly rhs = nc_scale(e.multiply(modified(s, t), modified(i, j)), Laurent::q_power(h));
          if (a.i < b.i && a.j < b.j) {
            long hx = extra_exponent(family, a, b);
            rhs = nc_sum(rhs, nc_scale(e.multiply(modified(i, t), modified(s, j)),
                                       Laurent::q_minus_qinv() * Laurent::q_power(hx)));
          }
          if (lhs != rhs) return false;
        }
  return true;
}

} // namespace qma
