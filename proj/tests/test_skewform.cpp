#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qma/skewform.hpp"

#include <random>

using namespace qma;

namespace {
Int ipow(long b, long e) {
  Int r = 1;
  for (long t = 0; t < e; ++t) r *= b;
  return r;
}
} // namespace

TEST_CASE("defining matrix, standard n=2") {
  SkewIntMatrix M = defining_matrix(AlgebraSpec::make(Family::standard, 2));
  std::vector<long> expect{0, 1, 1, 0, -1, 0, 0, 1, -1, 0, 0, 1, 0, -1, -1, 0};
  REQUIRE(M.N == 4);
  for (int i = 0; i < 16; ++i) CHECK(M.a[i] == expect[i]);
  CHECK(M.is_skew());

  SkewIntMatrix Mz = defining_matrix(AlgebraSpec::make(Family::jz, 2));
  CHECK(Mz.at(0, 3) == -2);
  for (int i = 0; i < Mz.N; ++i) CHECK(Mz.at(i, i) == 0);
}

TEST_CASE("skew normal form basics") {
  CanonicalForm z = skew_normal_form(SkewIntMatrix::zero(5));
  CHECK(z.blocks.empty());
  CHECK(z.zeros == 5);

  // certified forms for the named families
  CanonicalForm j0 = skew_normal_form(defining_matrix(AlgebraSpec::make(Family::j0, 3)));
  CHECK(j0.blocks == std::vector<Int>{1, 2, 2});
  CHECK(j0.zeros == 3);

  CanonicalForm jz = skew_normal_form(defining_matrix(AlgebraSpec::make(Family::jz, 3)));
  CHECK(jz.blocks == std::vector<Int>{2, 2, 2});
  CHECK(jz.zeros == 3);
}

TEST_CASE("ranks") {
  CHECK(rank(defining_matrix(AlgebraSpec::make(Family::jz, 3))) == 6);
  CHECK(rank(defining_matrix(AlgebraSpec::make(Family::jn, 3))) == 8);
  CHECK(rank(defining_matrix(AlgebraSpec::make(Family::jn, 4))) == 16);
}

TEST_CASE("degrees") {
  CHECK(degree_at(defining_matrix(AlgebraSpec::make(Family::j0, 3)), 3) == 27);
  CHECK(degree_at(defining_matrix(AlgebraSpec::make(Family::standard, 3)), 3) == 27);
  CHECK(degree_at(defining_matrix(AlgebraSpec::make(Family::dipper, 3)), 3) == 81);
  CHECK_THROWS(degree_at(SkewIntMatrix::zero(2), 2));
}

TEST_CASE("degree invariant under unimodular congruence (fuzz)") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 8), val(-2, 2);
  SkewIntMatrix M = defining_matrix(AlgebraSpec::make(Family::j0, 3));
  const int N = M.N;
  for (int trial = 0; trial < 10; ++trial) {
    // random unimodular W as a product of elementary congruences
    SkewIntMatrix A = M;
    for (int step = 0; step < 12; ++step) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      Int t = val(rng);
      for (int c = 0; c < N; ++c) A.a[size_t(i) * N + c] += t * A.a[size_t(j) * N + c];
      for (int r = 0; r < N; ++r) A.a[size_t(r) * N + i] += t * A.a[size_t(r) * N + j];
    }
    REQUIRE(A.is_skew());
    for (long m : {3L, 4L, 5L}) CHECK(degree_at(A, m) == degree_at(M, m));
    CHECK(rank(A) == rank(M));
  }
}

TEST_CASE("rank bound for algebras satisfying the antidiagonal commutation") {
  // families whose opposite-diagonal generators commute have rank >= n^2 - n
  for (int n : {2, 3, 4}) {
    for (Family f : {Family::standard, Family::j0, Family::jz}) {
      AlgebraSpec spec = AlgebraSpec::make(f, n);
      bool commu = true;
      for (int i = 1; i <= n && commu; ++i)
        for (int j = i + 1; j <= n && commu; ++j)
          commu = exchange_exponent(spec, {i, n + 1 - i}, {j, n + 1 - j}) == 0;
      REQUIRE(commu);
      CHECK(rank(defining_matrix(spec)) >= n * n - n);
    }
    // jn satisfies it only for n = 2; dipper never does
    AlgebraSpec dp = AlgebraSpec::make(Family::dipper, n);
    CHECK(exchange_exponent(dp, {1, n}, {n, 1}) != 0);
  }
  AlgebraSpec jn2 = AlgebraSpec::make(Family::jn, 2);
  CHECK(exchange_exponent(jn2, {1, 2}, {2, 1}) == 0);
  CHECK(rank(defining_matrix(jn2)) >= 2);
}

TEST_CASE("verify_canonical_theorems per family") {
  for (int n : {2, 3, 4})
    for (Family f : {Family::standard, Family::dipper, Family::j0, Family::jz, Family::jn})
      for (const ClaimResult &c : verify_canonical_theorems(f, n, {3, 4, 5})) {
        // known deviation: the expected J^n rank fails at n = 2, where the
        // algebra degenerates to M_q(2); pinned below
        bool known_deviation = (f == Family::jn && n == 2 && c.tag == "Jn rank");
        if (known_deviation) CHECK_FALSE(c.pass);
        else CHECK_MESSAGE(c.pass, family_name(f), " n=", n, ": ", c.claim, " [", c.detail, "]");
      }
  // (j0, 4): blocks (1,2,2,2,2,2), rank 12
  CanonicalForm cf = skew_normal_form(defining_matrix(AlgebraSpec::make(Family::j0, 4)));
  CHECK(cf.blocks == std::vector<Int>{1, 2, 2, 2, 2, 2});
  CHECK(cf.blocks.size() * 2 == 12);
  // J^n_q(2) degenerates to M_q(2): same defining matrix, rank 2
  CHECK(defining_matrix(AlgebraSpec::make(Family::jn, 2)).a ==
        defining_matrix(AlgebraSpec::make(Family::standard, 2)).a);
  CHECK(rank(defining_matrix(AlgebraSpec::make(Family::jn, 2))) == 2);
}

TEST_CASE("dipper-donkin abstract matrix") {
  for (int n : {2, 3, 4}) {
    SkewIntMatrix D = dipper_donkin_matrix(n);
    CanonicalForm cd = skew_normal_form(D);
    REQUIRE(cd.blocks.size() == size_t(n * n / 2));
    for (const Int &b : cd.blocks) CHECK(b == 1);
    for (long m : {3L, 4L, 5L}) {
      Int expect = 1;
      for (int t = 0; t < n * n / 2; ++t) expect *= m;
      CHECK(degree_at(D, m) == expect);
    }
  }
}

TEST_CASE("extended algebra canonical data") {
  // A_n = C[L^{+-1}] x_s M_q(n).  The certified canonical form is
  // S(1)^{2n-1}, S(2)^{(n-1)(n-2)/2}; the commonly quoted S(1)^{3n-3} count
  // is off for n >= 3 (cross-checked by mod-2 rank and classical Smith
  // form), so the degrees below follow the computed blocks.  At odd m both
  // give m^{(n^2+n)/2}.
  for (int n : {2, 3, 4}) {
    SkewIntMatrix M = defining_matrix(AlgebraSpec::make(Family::standard, n), true);
    REQUIRE(M.N == n * n + 2 * n - 1);
    // L-L subblock is zero
    for (int k = n * n; k < M.N; ++k)
      for (int l = n * n; l < M.N; ++l) CHECK(M.at(k, l) == 0);
    CanonicalForm cf = skew_normal_form(M);
    size_t ones = 2 * n - 1, twos = size_t(n - 1) * (n - 2) / 2;
    REQUIRE(cf.blocks.size() == ones + twos);
    for (size_t b = 0; b < cf.blocks.size(); ++b)
      CHECK(cf.blocks[b] == (b < ones ? 1 : 2));
    CHECK(cf.zeros == n - 1);
    for (long m : {3L, 5L}) {
      // odd m: agrees with the quoted closed form m^{3n-3} m'^{(n-2)(n-3)/2}
      Int expect = ipow(m, (long)(3 * n - 3)) * ipow(mprime(m), (long)(n - 2) * (n - 3) / 2);
      CHECK(degree_at(M, m) == expect);
    }
    // even m: the computed closed form m^{2n-1} m'^{(n-1)(n-2)/2}
    Int expect4 = ipow(4, (long)(2 * n - 1)) * ipow(2, (long)(n - 1) * (n - 2) / 2);
    CHECK(degree_at(M, 4) == expect4);
  }
  CHECK(degree_at(defining_matrix(AlgebraSpec::make(Family::standard, 3), true), 3) == 729);
}

namespace {
int rational_rank(const SkewIntMatrix &M) {
  int N = M.N, rank = 0;
  std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A[i][j] = Rat(M.at(i, j));
  for (int c = 0; c < N && rank < N; ++c) {
    int piv = rank;
    while (piv < N && A[piv][c] == 0) ++piv;
    if (piv == N) continue;
    std::swap(A[piv], A[rank]);
    for (int r = 0; r < N; ++r) {
      if (r == rank || A[r][c] == 0) continue;
      Rat f = A[r][c] / A[rank][c];
      for (int cc = 0; cc < N; ++cc) A[r][cc] -= f * A[rank][cc];
    }
    ++rank;
  }
  return rank;
}
} // namespace

TEST_CASE("rank agrees with an independent rational elimination") {
  for (Family f : {Family::standard, Family::dipper, Family::j0, Family::jz, Family::jn})
    for (int n : {2, 3, 4}) {
      SkewIntMatrix M = defining_matrix(AlgebraSpec::make(f, n));
      CHECK(rank(M) == rational_rank(M));
    }
  SkewIntMatrix E = defining_matrix(AlgebraSpec::make(Family::standard, 4), true);
  CHECK(rank(E) == rational_rank(E));
}
