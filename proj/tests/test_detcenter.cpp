#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qma/detcenter.hpp"
#include "qma/skewform.hpp"

using namespace qma;

namespace {

Monomial z_mono(const Engine &e, std::initializer_list<std::pair<int, int>> gens) {
  Monomial m = e.scalar_monomial();
  for (auto [i, j] : gens) m.z1[(i - 1) * e.n() + (j - 1)] += 1;
  return m;
}

} // namespace

TEST_CASE("qdet basics") {
  Engine e(AlgebraSpec::make(Family::standard, 2));
  NCPoly d = qdet_full(e);
  REQUIRE(d.size() == 2);
  CHECK(d.at(z_mono(e, {{1, 1}, {2, 2}})) == Laurent(1));
  CHECK(d.at(z_mono(e, {{1, 2}, {2, 1}})) == Laurent::q_power(1, -1));

  // singleton minor is the generator itself
  NCPoly s = qdet(e, MinorSpec{{2}, {1}});
  REQUIRE(s.size() == 1);
  CHECK(s.begin()->first == z_mono(e, {{2, 1}}));
  CHECK(s.begin()->second == Laurent(1));
}

TEST_CASE("qdet is central for the standard family (generic q)") {
  for (int n : {2, 3}) {
    Engine e(AlgebraSpec::make(Family::standard, n));
    CHECK(e.central_check(qdet_full(e)));
  }
}

TEST_CASE("qdet squared has no correction terms (centrality route)") {
  Engine e(AlgebraSpec::make(Family::standard, 2));
  NCPoly d = qdet_full(e);
  NCPoly sq = e.multiply(d, d);
  // square equals straightening of the doubled word list; centrality means
  // the commutator with every generator vanishes identically
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(e.commutator(sq, e.gen(i, j)).empty());
}

TEST_CASE("modified determinants are covariant in every named family") {
  for (Family f : {Family::standard, Family::dipper, Family::j0, Family::jz, Family::jn})
    for (int n : {2, 3}) {
      Engine e(AlgebraSpec::make(f, n));
      CHECK(e.covariance_check(qdet_full(e)).has_value());
    }
}

TEST_CASE("quantum Laplace expansions, standard family") {
  for (int n : {2, 3}) {
    Engine e(AlgebraSpec::make(Family::standard, n));
    for (LaplaceMode mode : {LaplaceMode::row_za, LaplaceMode::row_az, LaplaceMode::col_za,
                             LaplaceMode::col_az})
      for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
          LaplaceReport rep = laplace_check(e, mode, i, k);
          CHECK_MESSAGE(rep.pass, "mode=", (int)mode, " i=", i, " k=", k, " ", rep.note);
          if (i == k)
            for (long ex : rep.exponents) CHECK(ex == 0); // Parshall-Wang, no twist
          CHECK(rep.affine);
        }
  }
}

TEST_CASE("modified Laplace solver, J0 and Jz at n = 2") {
  for (Family f : {Family::j0, Family::jz}) {
    Engine e(AlgebraSpec::make(f, 2));
    for (LaplaceMode mode : {LaplaceMode::row_za, LaplaceMode::row_az, LaplaceMode::col_za,
                             LaplaceMode::col_az})
      for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) {
          LaplaceReport rep = laplace_check(e, mode, i, k);
          CHECK_MESSAGE(rep.pass, family_name(f), " mode=", (int)mode, " i=", i, " k=", k, " ",
                        rep.note);
          CHECK(rep.affine);
        }
  }
  // golden data: solved exponents for the J0 row expansion at i = k = 1
  Engine j0(AlgebraSpec::make(Family::j0, 2));
  LaplaceReport rep = laplace_check(j0, LaplaceMode::row_za, 1, 1);
  REQUIRE(rep.pass);
  CHECK(rep.exponents == std::vector<long>{0, 0});
}

TEST_CASE("center generator lists") {
  Engine jz(AlgebraSpec::make(Family::jz, 2));
  auto gens = center_generators(jz, 3);
  bool has_m12 = false, has_m21 = false;
  for (const auto &g : gens) {
    if (g.name == "M_1n") has_m12 = true;
    if (g.name == "M_n1") has_m21 = true;
  }
  CHECK(has_m12);
  CHECK(has_m21);

  Engine j0(AlgebraSpec::make(Family::j0, 2));
  auto g0 = center_generators(j0, 3);
  int pow_count = 0, mix_count = 0;
  for (const auto &g : g0) {
    if (g.name.find("^m") != std::string::npos && g.name[0] == 'J' && g.name.find("J_1n") != 0)
      ++pow_count;
    if (g.name.find("J_1n^{m-r}") != std::string::npos) ++mix_count;
  }
  CHECK(pow_count == 4); // J_ij^3 for the four generators
  CHECK(mix_count == 3); // J_1n^{3-r} J_n1^r for r = 1,2,3
}

TEST_CASE("center certification, n = 2") {
  // Jz at m = 3
  Engine jz(AlgebraSpec::make(Family::jz, 2));
  for (const auto &[name, ok] : center_certify(jz, center_generators(jz, 3), 3))
    CHECK_MESSAGE(ok, "jz gen ", name);
  // J0 at m = 3 (odd) and m = 4 (even)
  Engine j0(AlgebraSpec::make(Family::j0, 2));
  for (unsigned m : {3u, 4u})
    for (const auto &[name, ok] : center_certify(j0, center_generators(j0, m), m))
      CHECK_MESSAGE(ok, "j0 m=", m, " gen ", name);
  // Jz n = 3 includes the tau terms M(2)^r tau(M(2)^r) det^{m-r}
  Engine jz3(AlgebraSpec::make(Family::jz, 3));
  {
    MinorSpec m2{{2, 3}, {1, 2}};
    NCPoly x = jz3.multiply(qdet(jz3, m2), tau_transpose(jz3, qdet(jz3, m2)));
    x = jz3.multiply(x, jz3.power(qdet_full(jz3), 2));
    CHECK(jz3.central_check(x, 3));
  }
  // negative control: J_11 itself is not central
  CHECK(!j0.central_check(j0.gen(1, 1), 3));
  // det_q is central for standard at zeta_3
  Engine st(AlgebraSpec::make(Family::standard, 2));
  CHECK(st.central_check(qdet_full(st), 3));
}

TEST_CASE("tau transpose is a well-defined anti-automorphism of Jz") {
  for (int n : {2, 3}) {
    Engine e(AlgebraSpec::make(Family::jz, n));
    // tau applied to each defining relation yields a valid identity:
    // tau(xy) = tau(y)tau(x) computed directly
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int s = 1; s <= n; ++s)
          for (int t = 1; t <= n; ++t) {
            NCPoly xy = e.multiply(e.gen(i, j), e.gen(s, t));
            NCPoly lhs = tau_transpose(e, xy);
            NCPoly rhs = e.multiply(e.gen(t, s), e.gen(j, i));
            CHECK(lhs == rhs); // tau(xy) = tau(y) tau(x), with q -> q^{-1}
          }
  }
}

TEST_CASE("qprop: det_q^m = det(Z^m) at roots of unity only") {
  Engine e2(AlgebraSpec::make(Family::standard, 2));
  CHECK(qprop_root(e2, 3));
  CHECK(qprop_generic_fails(e2, 3));
  Engine e3(AlgebraSpec::make(Family::standard, 3));
  CHECK(qprop_root(e3, 3));
}

TEST_CASE("central monomials X(j): x_1n powers central in quasipolynomial J0") {
  // X(j) x_{1,n}^{rm-n+1} and X(1) x_{1,n}^{rm-n+2} have exchange exponent
  // = 0 mod m against every generator (r minimal with rm-n+1 >= 0)
  for (int n : {2, 3, 4})
    for (unsigned m : {3u, 4u}) {
      Engine e(AlgebraSpec::make(Family::j0, n));
      long r = 1;
      while (r * (long)m - n + 1 < 0) ++r;
      std::vector<int> X1(n * n, 0);
      for (int i = 1; i <= n; ++i) X1[(i - 1) * n + (i - 1)] += 1;
      std::vector<int> X1p = X1;
      X1p[n - 1] += (int)(r * m - n + 2); // x_{1,n} exponent
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
          CHECK(e.monomial_exchange_exponent(X1p, {s, t}) % (long)m == 0);
      for (int j = 2; j <= n; ++j) {
        std::vector<int> B(n * n, 0);
        for (int rr = 1; rr <= n - j + 1; ++rr) B[(rr - 1) * n + (rr + j - 2)] += 1;
        for (int rr = n - j + 1; rr <= n; ++rr) B[(rr - 1) * n + (rr - (n - j + 1))] += 1;
        B[n - 1] += (int)(r * m - n + 1);
        for (int s = 1; s <= n; ++s)
          for (int t = 1; t <= n; ++t)
            CHECK(e.monomial_exchange_exponent(B, {s, t}) % (long)m == 0);
      }
    }
}

TEST_CASE("quasipolynomial center generator exponents vanish mod m") {
  // the x^m (m odd) / x^{m'} x^{m'} (m even) and x_1n^{m-r} x_n1^r monomials
  for (int n : {2, 3})
    for (unsigned m : {3u, 4u}) {
      Engine e(AlgebraSpec::make(Family::j0, n));
      long mp = mprime((long)m);
      auto check_central = [&](const std::vector<int> &B) {
        for (int s = 1; s <= n; ++s)
          for (int t = 1; t <= n; ++t)
            CHECK(e.monomial_exchange_exponent(B, {s, t}) % (long)m == 0);
      };
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          std::vector<int> B(n * n, 0);
          if (m % 2 == 1) B[(i - 1) * n + (j - 1)] += (int)m;
          else {
            B[(i - 1) * n + (j - 1)] += (int)mp;
            B[(j - 1) * n + (i - 1)] += (int)mp;
          }
          check_central(B);
        }
      for (long r = 1; r <= (long)m; ++r) {
        std::vector<int> B(n * n, 0);
        B[n - 1] += (int)((long)m - r);
        B[(n - 1) * n] += (int)r;
        check_central(B);
      }
    }
}


TEST_CASE("error paths") {
  Engine e(AlgebraSpec::make(Family::standard, 2));
  CHECK_THROWS(qdet(e, MinorSpec{{1, 2}, {1}}));     // size mismatch
  CHECK_THROWS(qdet(e, MinorSpec{{2, 1}, {1, 2}}));  // not increasing
  CHECK_THROWS(qdet(e, MinorSpec{{1, 3}, {1, 2}}));  // out of range
  CHECK_THROWS(center_generators(e, 3));             // standard unsupported
  CHECK_THROWS(center_generators(e, 2));             // m too small
}

TEST_CASE("Jn center: N^m powers and the corrected Omega(3)") {
  for (unsigned m : {3u, 5u}) {
    Engine e(AlgebraSpec::make(Family::jn, 3));
    auto gens = center_generators(e, m);
    bool has_omega = false;
    for (const auto &[name, ok] : center_certify(e, gens, m)) {
      CHECK_MESSAGE(ok, "jn m=", m, " gen ", name);
      if (name == "Omega(n)") has_omega = true;
    }
    CHECK(has_omega);
    // the transposed psi reading merges the diagonal exponents to a_2 + a_3
    // = m, i.e. a product of m-th powers of covariant minors: central too,
    // but reducible to the N^m generators; only the phi* reading carries the
    // independent leading monomial with exponents (n-2)A - I
    auto alt = center_generators(e, m, /*psi_as_phistar=*/false);
    for (const auto &g : alt)
      if (g.name == "Omega(n)") CHECK(e.central_check(g.poly, m));
  }
  // even n: no Omega factor
  Engine e2(AlgebraSpec::make(Family::jn, 2));
  for (const auto &g : center_generators(e2, 3)) CHECK(g.name != "Omega(n)");
}
