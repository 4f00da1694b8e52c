#include "qma/variety.hpp"

#include <stdexcept>

#include "qma/cyclotomic.hpp"

namespace qma {

QValue QValue::rational(Rat v) {
  if (v == 0 || v == 1 || v == -1)
    throw std::invalid_argument("QValue: rational q with q^2 = 1 or q = 0 rejected");
  QValue x;
  x.kind = Kind::rational;
  x.r = std::move(v);
  return x;
}

QValue QValue::root(unsigned m) {
  if (m == 2 || m == 1) throw std::invalid_argument("QValue: root order must be >= 3");
  QValue x;
  x.kind = Kind::root;
  x.m = m;
  return x;
}

std::vector<BilinearForm> variety_relations(Family f, int n) {
  std::vector<BilinearForm> out;
  if (f == Family::dipper) {
    // (7.2): D_ij D_st = q D_st D_ij (i>s, j<=t);
    //        D_ij D_st = D_st D_ij + (q-1) D_sj D_it (i>s, j>t);
    //        rows commute.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int s = 1; s <= n; ++s)
          for (int t = 1; t <= n; ++t) {
            GenPos a{i, j}, b{s, t};
            if (!(a < b)) continue;
            BilinearForm rel;
            if (i == s) {
              rel.push_back({Laurent(1), a, b});
              rel.push_back({Laurent(-1), b, a});
            } else if (t <= j) {
              // b is the lower row: D_b D_a = q D_a D_b
              rel.push_back({Laurent(1), b, a});
              rel.push_back({Laurent::q_power(1, -1), a, b});
            } else {
              rel.push_back({Laurent(1), b, a});
              rel.push_back({Laurent(-1), a, b});
              rel.push_back({-(Laurent::q() - Laurent(1)), GenPos{i, t}, GenPos{s, j}});
            }
            out.push_back(std::move(rel));
          }
    return out;
  }
  AlgebraSpec spec = AlgebraSpec::make(f, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          GenPos a{i, j}, b{s, t};
          if (!(a < b)) continue;
          long h = exchange_exponent(spec, a, b);
          BilinearForm rel;
          rel.push_back({Laurent(1), a, b});
          rel.push_back({Laurent::q_power(h, -1), b, a});
          if (a.i < b.i && a.j < b.j) {
            long hx = extra_exponent(spec, a, b);
            rel.push_back({-(Laurent::q_minus_qinv() * Laurent::q_power(hx)),
                           GenPos{a.i, b.j}, GenPos{b.i, a.j}});
          }
          out.push_back(std::move(rel));
        }
  return out;
}

bool variety_membership(Family f, int n, const QMatrix &A, const QMatrix &B, const QValue &q) {
  if (A.n != n || B.n != n) throw std::invalid_argument("variety_membership: shape mismatch");
  for (const BilinearForm &rel : variety_relations(f, n)) {
    Laurent val;
    for (const BilinearTerm &t : rel)
      val += t.coeff * A.at(t.g1.i, t.g1.j) * B.at(t.g2.i, t.g2.j);
    switch (q.kind) {
      case QValue::Kind::symbolic:
        if (!val.is_zero()) return false;
        break;
      case QValue::Kind::rational:
        if (val.evaluate(q.r) != 0) return false;
        break;
      case QValue::Kind::root:
        if (!specialize(val, q.m).is_zero()) return false;
        break;
    }
  }
  return true;
}

namespace {

// deterministic nonzero rationals for witness data
long seed_entry(int k) {
  static const long vals[] = {1, 2, 3, 5, 7, 4, 9, 11, 6, 13};
  return vals[k % 10];
}

} // namespace

std::vector<VarietyWitness> variety_witnesses(Family f, int n) {
  std::vector<VarietyWitness> out;
  auto q = [](long e) { return Laurent::q_power(e); };

  if (f == Family::j0 || f == Family::jz) {
    // rank one: A = u v^T, B = q^{i+j} A (j0) or B = A (jz)
    VarietyWitness w1;
    w1.name = family_name(f) + " rank-one";
    w1.A = QMatrix::zero(n);
    w1.B = QMatrix::zero(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Rat v = Rat(seed_entry(i)) * Rat(seed_entry(3 + j));
        w1.A.at(i, j) = Laurent(v);
        w1.B.at(i, j) = f == Family::j0 ? Laurent::q_power(i + j, v) : Laurent(v);
      }
    out.push_back(std::move(w1));

    // two blocks: a rank-one block in the top-left corner and another in the
    // bottom-right; the second B-block carries the q^{-2} twist
    if (n >= 2) {
      VarietyWitness w2;
      w2.name = family_name(f) + " two-block";
      w2.A = QMatrix::zero(n);
      w2.B = QMatrix::zero(n);
      int split = n / 2; // rows/cols 1..split and split+1..n
      for (int i = 1; i <= split; ++i)
        for (int j = 1; j <= split; ++j) {
          Rat v = Rat(seed_entry(i) * seed_entry(3 + j));
          w2.A.at(i, j) = Laurent(v);
          w2.B.at(i, j) = f == Family::j0 ? Laurent::q_power(i + j, v) : Laurent(v);
        }
      for (int i = split + 1; i <= n; ++i)
        for (int j = split + 1; j <= n; ++j) {
          Rat v = Rat(seed_entry(5 + i) * seed_entry(j));
          w2.A.at(i, j) = Laurent(v);
          w2.B.at(i, j) = f == Family::j0 ? Laurent::q_power(i + j - 2, v) : Laurent::q_power(-2, v);
        }
      out.push_back(std::move(w2));
    }
    return out;
  }

  if (f == Family::dipper) {
    // two proportional rows R, cR at positions p < r; the proof's scaling
    // c_p = q c_r puts the q on the UPPER b-row (the displayed (qR,qcR) is
    // inconsistent with the proof)
    VarietyWitness w1;
    w1.name = "dipper proportional-rows";
    w1.A = QMatrix::zero(n);
    w1.B = QMatrix::zero(n);
    int p = 1, r = n;
    Rat c = 3;
    for (int j = 1; j <= n; ++j) {
      Rat rj = seed_entry(j);
      w1.A.at(p, j) = Laurent(rj);
      w1.A.at(r, j) = Laurent(c * rj);
      w1.B.at(p, j) = q(1).scaled(rj);
      w1.B.at(r, j) = Laurent(c * rj);
    }
    out.push_back(std::move(w1));

    // row blocks: one nonzero entry per row in a staircase, b = a
    VarietyWitness w2;
    w2.name = "dipper row-blocks";
    w2.A = QMatrix::zero(n);
    w2.B = QMatrix::zero(n);
    for (int i = 1; i <= n; ++i) {
      w2.A.at(i, i) = Laurent(seed_entry(i));
      w2.B.at(i, i) = Laurent(seed_entry(i));
    }
    out.push_back(std::move(w2));
    return out;
  }

  if (f == Family::jn) {
    // two proportional columns R, cR at positions p < r;
    // B columns are q^{k-col} R entrywise, with q^2 on the second block
    VarietyWitness w1;
    w1.name = "jn proportional-columns";
    w1.A = QMatrix::zero(n);
    w1.B = QMatrix::zero(n);
    int p = 1, r = n;
    Rat c = 2;
    for (int k = 1; k <= n; ++k) {
      Rat rk = seed_entry(k + 2);
      w1.A.at(k, p) = Laurent(rk);
      w1.A.at(k, r) = Laurent(c * rk);
      w1.B.at(k, p) = Laurent::q_power(k - p, rk);
      w1.B.at(k, r) = Laurent::q_power(k - r + 2, c * rk);
    }
    out.push_back(std::move(w1));

    // column blocks: b = q^{i-j} a entrywise
    VarietyWitness w2;
    w2.name = "jn column-blocks";
    w2.A = QMatrix::zero(n);
    w2.B = QMatrix::zero(n);
    for (int i = 1; i <= n; ++i) {
      Rat v = seed_entry(i + 1);
      w2.A.at(i, i) = Laurent(v);
      w2.B.at(i, i) = Laurent(v); // q^{i-i} = 1
    }
    out.push_back(std::move(w2));
    return out;
  }

  if (f == Family::standard) {
    // zero pair only (the standard variety is handled in the literature;
    // kept for the trivial membership sanity check)
    VarietyWitness w;
    w.name = "standard zero";
    w.A = QMatrix::zero(n);
    w.B = QMatrix::zero(n);
    out.push_back(std::move(w));
    return out;
  }
  throw std::invalid_argument("variety_witnesses: unsupported family");
}

} // namespace qma
