#include "qma/skewform.hpp"

#include <sstream>
#include <stdexcept>

namespace qma {

bool SkewIntMatrix::is_skew() const {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

SkewIntMatrix defining_matrix(const AlgebraSpec &spec, bool with_L) {
  const int n = spec.n;
  const int nz = n * n;
  const int N = with_L ? nz + 2 * n - 1 : nz;
  SkewIntMatrix M = SkewIntMatrix::zero(N);
  auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          GenPos a{i, j}, b{s, t};
          if (!(a < b)) continue;
          long h = exchange_exponent(spec, a, b);
          M.at(idx(i, j), idx(s, t)) = h;
          M.at(idx(s, t), idx(i, j)) = -h;
        }
  if (with_L) {
    for (int k = 0; k < 2 * n - 1; ++k) {
      Weight lam(n);
      lam.c[k] = 1;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          long h = pairing_alpha(n, i, j, lam); // L_k Z = q^h Z L_k
          M.at(nz + k, idx(i, j)) = h;
          M.at(idx(i, j), nz + k) = -h;
        }
    }
  }
  return M;
}

SkewIntMatrix dipper_donkin_matrix(int n) {
  SkewIntMatrix M = SkewIntMatrix::zero(n * n);
  auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          if (!(GenPos{i, j} < GenPos{s, t})) continue;
          // D_st D_ij = q D_ij D_st when s > i and t <= j
          long h = (s > i && t <= j) ? -1 : 0;
          M.at(idx(i, j), idx(s, t)) = h;
          M.at(idx(s, t), idx(i, j)) = -h;
        }
  return M;
}

namespace {

struct Worker {
  int N;
  std::vector<Int> A; // current matrix
  std::vector<Int> W; // accumulated transform

  Int &a(int i, int j) { return A[size_t(i) * N + j]; }

  // row i += t * row j, and the same on columns (congruence)
  void add(int i, int j, const Int &t) {
    for (int c = 0; c < N; ++c) A[size_t(i) * N + c] += t * A[size_t(j) * N + c];
    for (int r = 0; r < N; ++r) A[size_t(r) * N + i] += t * A[size_t(r) * N + j];
    for (int c = 0; c < N; ++c) W[size_t(i) * N + c] += t * W[size_t(j) * N + c];
  }

  void swap_rc(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < N; ++c) std::swap(A[size_t(i) * N + c], A[size_t(j) * N + c]);
    for (int r = 0; r < N; ++r) std::swap(A[size_t(r) * N + i], A[size_t(r) * N + j]);
    for (int c = 0; c < N; ++c) std::swap(W[size_t(i) * N + c], W[size_t(j) * N + c]);
  }
};

} // namespace

CanonicalForm skew_normal_form(const SkewIntMatrix &M) {
  if (!M.is_skew()) throw std::invalid_argument("skew_normal_form: matrix not skew-symmetric");
  const int N = M.N;
  Worker w;
  w.N = N;
  w.A = M.a;
  w.W.assign(size_t(N) * N, Int(0));
  for (int i = 0; i < N; ++i) w.W[size_t(i) * N + i] = 1;

  std::vector<Int> blocks;
  int pos = 0;
  while (pos + 1 < N) {
    // minimal nonzero |entry| in the remaining principal submatrix
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = pos; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        Int v = abs(w.a(i, j));
        if (v != 0 && (bi < 0 || v < best)) { best = v; bi = i; bj = j; }
      }
    if (bi < 0) break;

    w.swap_rc(pos, bi);
    if (bj == pos) bj = bi; // the swap moved it
    w.swap_rc(pos + 1, bj);
    if (w.a(pos, pos + 1) < 0) w.swap_rc(pos, pos + 1);

    // With the pivot anchored, alternate clearing and divisor-chain fusing.
    // Any Euclidean remainder leaves a strictly smaller entry, so restarting
    // the pivot search terminates.
    bool restart = false, block_done = false;
    while (!restart && !block_done) {
      Int p = w.a(pos, pos + 1);
      for (int k = pos + 2; k < N && !restart; ++k) {
        if (w.a(k, pos) != 0) {
          Int q = w.a(k, pos) / p; // A[pos+1][pos] = -p
          if (q != 0) w.add(k, pos + 1, q);
          if (w.a(k, pos) != 0) restart = true;
        }
        if (!restart && w.a(k, pos + 1) != 0) {
          Int q = w.a(k, pos + 1) / p;
          if (q != 0) w.add(k, pos, -q);
          if (w.a(k, pos + 1) != 0) restart = true;
        }
      }
      if (restart) break;

      // everything deeper must be divisible by the pivot
      bool fused = false;
      for (int i = pos + 2; i < N && !fused; ++i)
        for (int j = i + 1; j < N && !fused; ++j)
          if (w.a(i, j) % p != 0) {
            w.add(pos, i, Int(1)); // drags a non-divisible entry into column pos
            fused = true;
          }
      if (!fused) {
        // orient the block as S(p) = [[0,-p],[p,0]]
        w.swap_rc(pos, pos + 1);
        blocks.push_back(p);
        pos += 2;
        block_done = true;
      }
    }
  }

  CanonicalForm cf;
  cf.N = N;
  cf.blocks = std::move(blocks);
  cf.zeros = N - 2 * (int)cf.blocks.size();
  cf.W = std::move(w.W);

  // certificate: W M W^t equals the block form exactly
  std::vector<Int> T(size_t(N) * N, Int(0)), R(size_t(N) * N, Int(0));
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      const Int &wik = cf.W[size_t(i) * N + k];
      if (wik == 0) continue;
      for (int j = 0; j < N; ++j) T[size_t(i) * N + j] += wik * M.a[size_t(k) * N + j];
    }
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      const Int &tik = T[size_t(i) * N + k];
      if (tik == 0) continue;
      for (int j = 0; j < N; ++j) R[size_t(i) * N + j] += tik * cf.W[size_t(j) * N + k];
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Int expect = 0;
      for (size_t b = 0; b < cf.blocks.size(); ++b) {
        if (i == 2 * (int)b && j == 2 * (int)b + 1) expect = -cf.blocks[b];
        if (i == 2 * (int)b + 1 && j == 2 * (int)b) expect = cf.blocks[b];
      }
      if (R[size_t(i) * N + j] != expect)
        throw std::logic_error("skew_normal_form: certificate check failed");
    }
  for (size_t b = 1; b < cf.blocks.size(); ++b)
    if (cf.blocks[b] % cf.blocks[b - 1] != 0)
      throw std::logic_error("skew_normal_form: divisor chain violated");
  return cf;
}

int rank(const SkewIntMatrix &M) { return 2 * (int)skew_normal_form(M).blocks.size(); }

Int degree_at(const SkewIntMatrix &M, long m) {
  if (m < 1 || m == 2) throw std::invalid_argument("degree_at: m must be >= 1 and != 2");
  CanonicalForm cf = skew_normal_form(M);
  Int deg = 1;
  for (const Int &b : cf.blocks) deg *= Int(m) / gcd(Int(m), b);
  return deg;
}

long mprime(long m) { return m % 2 == 1 ? m : m / 2; }

namespace {

Int ipow(long b, long e) {
  Int r = 1;
  for (long t = 0; t < e; ++t) r *= b;
  return r;
}

} // namespace

std::vector<ClaimResult> verify_canonical_theorems(Family f, int n, const std::vector<long> &ms) {
  std::vector<ClaimResult> out;
  AlgebraSpec spec = AlgebraSpec::make(f, n);
  SkewIntMatrix M = defining_matrix(spec);
  CanonicalForm cf = skew_normal_form(M);
  long rk = 2 * (long)cf.blocks.size();
  auto add = [&](const std::string &claim, const std::string &tag, bool pass, std::string detail = "") {
    out.push_back({claim, tag, pass, std::move(detail)});
  };
  std::ostringstream bl;
  for (const Int &b : cf.blocks) bl << b << " ";

  bool antidiag_commutes = true;
  for (int i = 1; i <= n && antidiag_commutes; ++i)
    for (int j = i + 1; j <= n && antidiag_commutes; ++j)
      antidiag_commutes = exchange_exponent(spec, {i, n + 1 - i}, {j, n + 1 - j}) == 0;
  if (antidiag_commutes)
    add("rank >= n^2 - n (commuting opposite diagonal)", "rank lower bound",
        rk >= (long)n * n - n);

  switch (f) {
    case Family::standard: {
      add("rank = n^2 - n", "standard defining matrix rank", rk == (long)n * n - n, bl.str());
      for (long m : ms) {
        Int expect = ipow(m, n - 1) * ipow(mprime(m), (long)(n - 2) * (n - 1) / 2);
        add("degree = m^(n-1) m'^((n-2)(n-1)/2), m=" + std::to_string(m), "standard degree",
            degree_at(M, m) == expect);
      }
      // extended algebra A_n: certified blocks S(1)^{2n-1} S(2)^{(n-1)(n-2)/2}
      SkewIntMatrix E = defining_matrix(spec, true);
      CanonicalForm ce = skew_normal_form(E);
      bool shape = ce.blocks.size() == size_t(2 * n - 1) + size_t(n - 1) * (n - 2) / 2 &&
                   ce.zeros == n - 1;
      for (size_t b = 0; shape && b < ce.blocks.size(); ++b)
        shape = ce.blocks[b] == (b < size_t(2 * n - 1) ? 1 : 2);
      add("extended blocks S(1)^{2n-1} S(2)^{(n-1)(n-2)/2}", "extended algebra canonical form",
          shape);
      for (long m : ms) {
        Int expect = ipow(m, 2 * n - 1) * ipow(mprime(m), (long)(n - 1) * (n - 2) / 2);
        add("extended degree = m^(2n-1) m'^((n-1)(n-2)/2), m=" + std::to_string(m),
            "extended algebra degree (computed closed form)", degree_at(E, m) == expect);
      }
      break;
    }
    case Family::dipper: {
      // the m^[n^2/2] closed form concerns D_q(n) itself; the realization is
      // D_{q^{-2}}(n), its defining matrix the doubled one
      SkewIntMatrix D = dipper_donkin_matrix(n);
      for (long m : ms) {
        Int expect = ipow(m, (long)(n * n) / 2);
        add("degree D_q(n) = m^[n^2/2], m=" + std::to_string(m), "Dipper-Donkin degree", degree_at(D, m) == expect);
        Int expect_real = ipow(mprime(m), (long)(n * n) / 2);
        add("realization degree = m'^[n^2/2], m=" + std::to_string(m), "Dipper-Donkin realization",
            degree_at(M, m) == expect_real);
      }
      CanonicalForm cd = skew_normal_form(D);
      bool doubled = cd.blocks.size() == cf.blocks.size();
      for (size_t b = 0; doubled && b < cd.blocks.size(); ++b)
        doubled = cf.blocks[b] == 2 * cd.blocks[b];
      add("realization blocks are the doubled D_q(n) blocks", "Dipper-Donkin realization", doubled, bl.str());
      break;
    }
    case Family::j0: {
      bool shape = cf.blocks.size() == size_t(n * n - n) / 2 && cf.zeros == n;
      if (shape) {
        shape = cf.blocks[0] == 1;
        for (size_t b = 1; b < cf.blocks.size(); ++b) shape = shape && cf.blocks[b] == 2;
      }
      add("canonical form diag(S(1),S(2),...,S(2),0..)", "J0 canonical form", shape, bl.str());
      add("rank = n^2 - n", "J0 canonical form", rk == (long)n * n - n);
      for (long m : ms) {
        Int expect = Int(m) * ipow(mprime(m), ((long)n * n - n - 2) / 2);
        add("degree = m m'^((n^2-n-2)/2), m=" + std::to_string(m), "J0 degree",
            degree_at(M, m) == expect);
      }
      break;
    }
    case Family::jz: {
      bool shape = cf.blocks.size() == size_t(n * n - n) / 2 && cf.zeros == n;
      for (const Int &b : cf.blocks) shape = shape && b == 2;
      add("canonical form diag(S(2),...,S(2),0..)", "Jz canonical form", shape, bl.str());
      add("rank = n^2 - n", "Jz rank", rk == (long)n * n - n);
      break;
    }
    case Family::jn: {
      // the expected rank fails at n = 2, where J^n_q(2) degenerates to
      // M_q(2) (rank 2); pinned by the computed claim below
      long expect = n % 2 == 0 ? (long)n * n : (long)n * n - 1;
      add("rank = n^2 (n even) / n^2-1 (n odd)", "Jn rank", rk == expect, bl.str());
      if (n == 2)
        add("n=2 degeneration: defining matrix equals M_q(2)'s (rank 2)", "computed",
            M.a == defining_matrix(AlgebraSpec::make(Family::standard, 2)).a && rk == 2);
      break;
    }
    case Family::custom:
      break;
  }
  return out;
}

} // namespace qma
