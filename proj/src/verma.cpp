#include "qma/verma.hpp"

#include <algorithm>
#include <numeric>

#include "qma/skewform.hpp"

namespace qma {

namespace {

struct Builder {
  const Engine &eng;
  const AlgebraSpec &spec;
  unsigned m;
  int n;
  std::vector<Cyc> lambda; // length n, indexed by the diagonal label k
  std::optional<Cyc> phi;  // J0 minimal case
  int phi_pos = -1;        // zidx of the m-truncated generator

  std::vector<int> raising;
  std::vector<long> bounds;
  std::vector<long> strides;
  long dim = 0;

  Builder(const Engine &e, unsigned m_, std::vector<Cyc> lam)
      : eng(e), spec(e.spec()), m(m_), n(e.n()), lambda(std::move(lam)) {}

  void setup_basis() {
    const long mp = mprime((long)m);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i + j <= n) {
          int z = (i - 1) * n + (j - 1);
          raising.push_back(z);
          bounds.push_back(z == phi_pos ? (long)m : mp);
        }
    strides.assign(raising.size(), 1);
    dim = 1;
    for (long t = (long)raising.size() - 1; t >= 0; --t) {
      strides[t] = dim;
      dim *= bounds[t];
    }
  }

  long index_of(const std::vector<long> &exps) const {
    long idx = 0;
    for (size_t t = 0; t < exps.size(); ++t) idx += exps[t] * strides[t];
    return idx;
  }

  int zone(int z) const { // z = zidx
    int i = z / n + 1, j = z % n + 1;
    if (i + j <= n) return 0;      // raising
    if (i + j == n + 1) return 1;  // opposite diagonal
    return 2;                      // lowering
  }

  // g . v_B as a sparse column over the basis
  std::map<long, Cyc> act(int gi, int gj, const std::vector<long> &B) {
    Word w;
    w.push_back(Letter::Z(gi, gj));
    for (size_t t = 0; t < raising.size(); ++t) {
      int z = raising[t];
      for (long rep = 0; rep < B[t]; ++rep) w.push_back(Letter::Z(z / n + 1, z % n + 1));
    }
    NCPoly straightened = eng.straighten(w);

    std::map<long, Cyc> out;
    for (const auto &[mono, coeff] : straightened) {
      Cyc f = specialize(coeff, m);
      if (f.is_zero()) continue;
      // right-to-left three-zone reduction of the ordered monomial
      std::vector<long> tail(raising.size(), 0);
      long qshift = 0;
      bool dead = false;
      for (int z = n * n - 1; z >= 0 && !dead; --z) {
        int e = mono.z1[z];
        if (e == 0) continue;
        switch (zone(z)) {
          case 2: // lowering kills the cyclic vector through the raising tail
            dead = true;
            break;
          case 1: { // diagonal: q-commutes past the tail, then acts by lambda
            int k = z / n + 1;
            for (size_t t = 0; t < raising.size(); ++t) {
              if (tail[t] == 0) continue;
              int rz = raising[t];
              qshift += (long)e * tail[t] *
                        exchange_exponent(spec, GenPos{z / n + 1, z % n + 1},
                                          GenPos{rz / n + 1, rz % n + 1});
            }
            f *= lambda[k - 1].pow(e);
            if (f.is_zero()) dead = true;
            break;
          }
          case 0: { // raising: absorb into the tail with the overflow rule
            size_t t = std::lower_bound(raising.begin(), raising.end(), z) - raising.begin();
            tail[t] += e;
            if (z == phi_pos) {
              while (tail[t] >= (long)m) {
                tail[t] -= (long)m;
                f *= *phi; // Z^m is central at zeta_m and acts by phi
              }
              if (f.is_zero()) dead = true;
            } else if (tail[t] >= mprime((long)m)) {
              dead = true; // Z^{m'} pushes through and kills the cyclic vector
            }
            break;
          }
        }
      }
      if (dead) continue;
      Cyc total = f * Cyc::zeta(m, qshift);
      if (total.is_zero()) continue;
      long idx = index_of(tail);
      auto it = out.find(idx);
      if (it == out.end()) out.emplace(idx, total);
      else {
        it->second += total;
        if (it->second.is_zero()) out.erase(it);
      }
    }
    return out;
  }

  ModuleRep build() {
    setup_basis();
    ModuleRep rep;
    rep.spec = spec;
    rep.m = m;
    rep.dim = dim;
    rep.raising = raising;
    rep.bounds = bounds;
    rep.mats.assign(size_t(n) * n, {});
    std::vector<long> B(raising.size(), 0);
    for (int gi = 1; gi <= n; ++gi)
      for (int gj = 1; gj <= n; ++gj)
        rep.mats[(gi - 1) * n + (gj - 1)].assign(size_t(dim) * dim, Cyc(m, 0));
    for (long c = 0; c < dim; ++c) {
      // decode index c into exponents
      long rem = c;
      for (size_t t = 0; t < raising.size(); ++t) {
        B[t] = rem / strides[t];
        rem %= strides[t];
      }
      for (int gi = 1; gi <= n; ++gi)
        for (int gj = 1; gj <= n; ++gj) {
          auto col = act(gi, gj, B);
          auto &mat = rep.mats[(gi - 1) * n + (gj - 1)];
          for (const auto &[r, v] : col) mat[size_t(r) * dim + c] = v;
        }
    }
    return rep;
  }
};

} // namespace

ModuleRep build_restricted_verma(const AlgebraSpec &spec, unsigned m, std::vector<Cyc> lambda) {
  if (m < 3) throw std::invalid_argument("build_restricted_verma: m >= 3 required");
  if ((int)lambda.size() != spec.n)
    throw std::invalid_argument("build_restricted_verma: lambda must have n entries");
  // condition (29): the opposite-diagonal generators commute
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j)
      if (exchange_exponent(spec, {i, spec.n + 1 - i}, {j, spec.n + 1 - j}) != 0)
        throw ConditionCommuFailed("opposite-diagonal generators fail to commute");
  Engine e(spec);
  Builder b(e, m, std::move(lambda));
  return b.build();
}

ModuleRep build_min_generalized_verma_j0(int n, unsigned m, std::vector<Cyc> lambda, Cyc phi) {
  if (m < 3) throw std::invalid_argument("build_min_generalized_verma_j0: m >= 3 required");
  AlgebraSpec spec = AlgebraSpec::make(Family::j0, n);
  Engine e(spec);
  Builder b(e, m, std::move(lambda));
  b.phi = std::move(phi);
  b.phi_pos = (n - 2) * n + 0; // generator (n-1, 1)
  return b.build();
}

bool verify_rep(const ModuleRep &rep) {
  const int n = rep.spec.n;
  const long d = rep.dim;
  const unsigned m = rep.m;
  auto mul = [&](const std::vector<Cyc> &A, const std::vector<Cyc> &B) {
    std::vector<Cyc> C(size_t(d) * d, Cyc(m, 0));
    for (long i = 0; i < d; ++i)
      for (long k = 0; k < d; ++k) {
        const Cyc &a = A[size_t(i) * d + k];
        if (a.is_zero()) continue;
        for (long j = 0; j < d; ++j) {
          const Cyc &b = B[size_t(k) * d + j];
          if (!b.is_zero()) C[size_t(i) * d + j] += a * b;
        }
      }
    return C;
  };
  auto scaled = [&](std::vector<Cyc> A, const Cyc &c) {
    for (Cyc &x : A) x *= c;
    return A;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          GenPos a{i, j}, b{s, t};
          if (!(a < b)) continue;
          const auto &MA = rep.mats[(i - 1) * n + (j - 1)];
          const auto &MB = rep.mats[(s - 1) * n + (t - 1)];
          long h = exchange_exponent(rep.spec, a, b);
          std::vector<Cyc> lhs = mul(MA, MB);
          std::vector<Cyc> rhs = scaled(mul(MB, MA), Cyc::zeta(m, h));
          if (a.i < b.i && a.j < b.j) {
            long hx = extra_exponent(rep.spec, a, b);
            Cyc corr = specialize(Laurent::q_minus_qinv(), m) * Cyc::zeta(m, hx);
            const auto &MC = rep.mats[(i - 1) * n + (t - 1)];
            const auto &MD = rep.mats[(s - 1) * n + (j - 1)];
            std::vector<Cyc> extra = scaled(mul(MC, MD), corr);
            for (size_t idx = 0; idx < rhs.size(); ++idx) rhs[idx] += extra[idx];
          }
          if (lhs != rhs) return false;
        }
  return true;
}

namespace {

// --- Burnside closure over Q(zeta_m) ---------------------------------------

struct ExactSpan {
  long vecLen;
  unsigned m;
  // echelon rows: pivot index -> normalized row
  std::map<long, std::vector<Cyc>> rows;

  bool insert(std::vector<Cyc> v) {
    for (auto &[piv, row] : rows) {
      if (v[piv].is_zero()) continue;
      Cyc c = v[piv];
      for (long t = 0; t < vecLen; ++t)
        if (!row[t].is_zero()) v[t] -= c * row[t];
    }
    long piv = -1;
    for (long t = 0; t < vecLen; ++t)
      if (!v[t].is_zero()) { piv = t; break; }
    if (piv < 0) return false;
    Cyc inv = v[piv].inverse();
    for (long t = 0; t < vecLen; ++t)
      if (!v[t].is_zero()) v[t] *= inv;
    rows.emplace(piv, std::move(v));
    return true;
  }
};

bool burnside_exact(const ModuleRep &rep) {
  const int n = rep.spec.n;
  const long d = rep.dim;
  ExactSpan span{d * d, rep.m, {}};
  std::vector<std::vector<Cyc>> frontier;
  std::vector<Cyc> id(size_t(d) * d, Cyc(rep.m, 0));
  for (long i = 0; i < d; ++i) id[size_t(i) * d + i] = Cyc(rep.m, 1);
  span.insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty() && (long)span.rows.size() < d * d) {
    std::vector<std::vector<Cyc>> next;
    for (const auto &X : frontier)
      for (int g = 0; g < n * n; ++g) {
        const auto &G = rep.mats[g];
        std::vector<Cyc> Y(size_t(d) * d, Cyc(rep.m, 0));
        for (long i = 0; i < d; ++i)
          for (long k = 0; k < d; ++k) {
            const Cyc &a = G[size_t(i) * d + k];
            if (a.is_zero()) continue;
            for (long j = 0; j < d; ++j) {
              const Cyc &x = X[size_t(k) * d + j];
              if (!x.is_zero()) Y[size_t(i) * d + j] += a * x;
            }
          }
        std::vector<Cyc> copy = Y;
        if (span.insert(std::move(copy))) next.push_back(std::move(Y));
        if ((long)span.rows.size() == d * d) return true;
      }
    frontier = std::move(next);
  }
  return (long)span.rows.size() == d * d;
}

// --- Burnside closure over F_p ----------------------------------------------

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 p) { return (unsigned __int128)a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// root of Phi_m in F_p, p = k m + 1: an element of multiplicative order m
std::optional<u64> order_m_root(u64 p, unsigned m) {
  for (u64 g = 2; g < 200; ++g) {
    u64 r = powmod(g, (p - 1) / m, p);
    if (r == 1) continue;
    // order divides m; primitive iff r^{m/q} != 1 for every prime q | m
    bool ok = true;
    unsigned mm = m;
    for (unsigned q = 2; q * q <= mm; ++q)
      if (mm % q == 0) {
        while (mm % q == 0) mm /= q;
        if (powmod(r, m / q, p) == 1) { ok = false; break; }
      }
    if (ok && mm > 1 && powmod(r, m / mm, p) == 1) ok = false;
    if (ok) return r;
  }
  return std::nullopt;
}

std::optional<u64> cyc_mod_p(const Cyc &c, u64 p, u64 zeta) {
  u64 acc = 0, zp = 1;
  for (size_t i = 0; i < c.coeffs().size(); ++i) {
    const Rat &x = c.coeffs()[i];
    if (x != 0) {
      Int num = numerator(x) % Int(p);
      Int den = denominator(x) % Int(p);
      if (den == 0) return std::nullopt;
      u64 nu = (u64)((num % Int(p) + Int(p)) % Int(p)).convert_to<unsigned long long>();
      u64 de = (u64)((den % Int(p) + Int(p)) % Int(p)).convert_to<unsigned long long>();
      u64 val = mulmod(nu, powmod(de, p - 2, p), p);
      acc = (acc + mulmod(val, zp, p)) % p;
    }
    zp = mulmod(zp, zeta, p);
  }
  return acc;
}

// returns true when the mod-p span is provably full (sound for
// irreducibility); nullopt when the reduction was unusable
std::optional<bool> burnside_modp(const ModuleRep &rep, u64 p) {
  if (!is_prime(p) || (p - 1) % rep.m != 0) return std::nullopt;
  auto zeta = order_m_root(p, rep.m);
  if (!zeta) return std::nullopt;
  const int n = rep.spec.n;
  const long d = rep.dim;
  std::vector<std::vector<u64>> gens(size_t(n) * n);
  for (int g = 0; g < n * n; ++g) {
    gens[g].resize(size_t(d) * d);
    for (size_t t = 0; t < gens[g].size(); ++t) {
      auto v = cyc_mod_p(rep.mats[g][t], p, *zeta);
      if (!v) return std::nullopt;
      gens[g][t] = *v;
    }
  }
  // echelon basis of the span, frontier-driven closure
  std::map<long, std::vector<u64>> rows;
  auto insert = [&](std::vector<u64> v) -> bool {
    for (auto &[piv, row] : rows) {
      if (v[piv] == 0) continue;
      u64 c = v[piv];
      for (long t = piv; t < d * d; ++t)
        if (row[t]) v[t] = (v[t] + p - mulmod(c, row[t], p)) % p;
    }
    long piv = -1;
    for (long t = 0; t < d * d; ++t)
      if (v[t]) { piv = t; break; }
    if (piv < 0) return false;
    u64 inv = powmod(v[piv], p - 2, p);
    for (long t = piv; t < d * d; ++t)
      if (v[t]) v[t] = mulmod(v[t], inv, p);
    rows.emplace(piv, std::move(v));
    return true;
  };
  std::vector<std::vector<u64>> frontier;
  std::vector<u64> id(size_t(d) * d, 0);
  for (long i = 0; i < d; ++i) id[size_t(i) * d + i] = 1;
  insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty() && (long)rows.size() < d * d) {
    std::vector<std::vector<u64>> next;
    for (const auto &X : frontier) {
      for (int g = 0; g < n * n; ++g) {
        std::vector<u64> Y(size_t(d) * d, 0);
        for (long i = 0; i < d; ++i)
          for (long k = 0; k < d; ++k) {
            u64 a = gens[g][size_t(i) * d + k];
            if (!a) continue;
            for (long j = 0; j < d; ++j) {
              u64 x = X[size_t(k) * d + j];
              if (x) Y[size_t(i) * d + j] = (Y[size_t(i) * d + j] + mulmod(a, x, p)) % p;
            }
          }
        std::vector<u64> copy = Y;
        if (insert(std::move(copy))) next.push_back(std::move(Y));
        if ((long)rows.size() == d * d) return true;
      }
    }
    frontier = std::move(next);
  }
  if ((long)rows.size() == d * d) return true;
  return std::nullopt; // not full mod p: inconclusive, caller decides exactly
}

} // namespace

bool irreducible(const ModuleRep &rep) {
  if (rep.dim <= 12) return burnside_exact(rep);
  for (u64 p : {1000003459ull, 1000003821ull, 2000000579ull}) {
    // adjust to p = 1 (mod m)
    u64 pp = p;
    while ((pp - 1) % rep.m != 0 || !is_prime(pp)) ++pp;
    auto r = burnside_modp(rep, pp);
    if (r.has_value()) return *r;
  }
  return burnside_exact(rep);
}

const std::vector<Cyc> &diagonal_action(const ModuleRep &rep, int k) {
  const int n = rep.spec.n;
  return rep.mats[(k - 1) * n + (n + 1 - k - 1)];
}

bool matrix_invertible(const ModuleRep &rep, int gen_zidx) {
  const long d = rep.dim;
  std::vector<Cyc> A = rep.mats[gen_zidx];
  long rank = 0;
  for (long c = 0; c < d && rank < d; ++c) {
    long piv = rank;
    while (piv < d && A[size_t(piv) * d + c].is_zero()) ++piv;
    if (piv == d) continue;
    std::swap_ranges(A.begin() + piv * d, A.begin() + (piv + 1) * d, A.begin() + rank * d);
    Cyc inv = A[size_t(rank) * d + c].inverse();
    for (long t = 0; t < d; ++t) A[size_t(rank) * d + t] *= inv;
    for (long r = 0; r < d; ++r) {
      if (r == rank || A[size_t(r) * d + c].is_zero()) continue;
      Cyc f = A[size_t(r) * d + c];
      for (long t = 0; t < d; ++t) A[size_t(r) * d + t] -= f * A[size_t(rank) * d + t];
    }
    ++rank;
  }
  return rank == d;
}

long basis_index_of_power(const ModuleRep &rep, int zidx, long e) {
  long idx = 0;
  long stride = 1;
  for (long t = (long)rep.raising.size() - 1; t >= 0; --t) {
    if (rep.raising[t] == zidx) idx = e * stride;
    stride *= rep.bounds[t];
  }
  return idx;
}

} // namespace qma
