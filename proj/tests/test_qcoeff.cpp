#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qma/cyclotomic.hpp"
#include "qma/laurent.hpp"

#include <random>

using namespace qma;

TEST_CASE("laurent basics") {
  Laurent p = Laurent::q_power(3) - Laurent(1); // q^3 - 1
  CHECK(!p.is_zero());
  CHECK(p.evaluate(1) == 0);
  CHECK(p.evaluate(2) == 7);
  CHECK((p - p).is_zero());
  Laurent qq = Laurent::q_minus_qinv();
  CHECK(qq.evaluate(2) == Rat(3, 2));
  CHECK((qq * qq).evaluate(2) == Rat(9, 4));
  auto mono = Laurent::q_power(-2, Rat(5, 3)).as_monomial();
  REQUIRE(mono.has_value());
  CHECK(mono->first == -2);
  CHECK(mono->second == Rat(5, 3));
}

TEST_CASE("laurent monomial ratio") {
  Laurent a = Laurent::q_power(1) + Laurent::q_power(3, 2);
  Laurent b = Laurent::q_power(-1) + Laurent::q_power(1, 2);
  auto r = b.monomial_ratio(a);
  REQUIRE(r.has_value());
  CHECK(r->first == 2);
  CHECK(r->second == 1);
  Laurent c = Laurent::q_power(-1) + Laurent::q_power(1, 3);
  CHECK(!c.monomial_ratio(a).has_value());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});          // x - 1
  CHECK(cyclotomic_poly(3) == std::vector<Int>{1, 1, 1});        // x^2 + x + 1
  CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1}); // x^4 - x^2 + 1
  CHECK(totient(12) == 4);
  // Phi_m(zeta_m) = 0 for m <= 24
  for (unsigned m = 3; m <= 24; ++m) {
    Laurent phi;
    auto c = cyclotomic_poly(m);
    for (size_t i = 0; i < c.size(); ++i) phi += Laurent::q_power((long)i, Rat(c[i]));
    CHECK(specialize(phi, m).is_zero());
  }
}

TEST_CASE("specialize examples") {
  // q^3 - 1 at m=3 is 0
  CHECK(specialize(Laurent::q_power(3) - Laurent(1), 3).is_zero());
  // q - q^{-1} at m=4 is 2*zeta_4
  Cyc v = specialize(Laurent::q_minus_qinv(), 4);
  CHECK(v == Cyc::zeta(4) * Cyc(4, 2));
  CHECK(v.coeffs() == std::vector<Rat>{0, 2});
  // q + q^2 at m=3 is -1
  CHECK(specialize(Laurent::q_power(1) + Laurent::q_power(2), 3) == Cyc(3, -1));
  CHECK_THROWS(specialize(Laurent(1), 2));
}

TEST_CASE("divide_limit examples") {
  for (unsigned m : {3u, 4u, 5u, 7u}) {
    Laurent p = Laurent::q_power((long)m) - Laurent(1);
    CHECK(divide_limit(p, m) == Cyc(m, Rat(1, (long)m)));
  }
  // double zero
  Laurent p3 = Laurent::q_power(3) - Laurent(1);
  CHECK(divide_limit(p3 * p3, 3).is_zero());
  // q^6 - 1 at m=3: limit 2/3
  CHECK(divide_limit(Laurent::q_power(6) - Laurent(1), 3) == Cyc(3, Rat(2, 3)));
  // pole when p(zeta) != 0
  CHECK_THROWS_AS(divide_limit(Laurent(1), 3), PoleError);
}

TEST_CASE("specialize is a ring homomorphism (randomized)") {
  std::mt19937 rng(12345);
  auto random_laurent = [&]() {
    Laurent p;
    std::uniform_int_distribution<int> ed(-5, 5), cd(-4, 4);
    for (int t = 0; t < 4; ++t) p += Laurent::q_power(ed(rng), cd(rng));
    return p;
  };
  for (unsigned m : {3u, 4u, 5u, 6u}) {
    for (int trial = 0; trial < 20; ++trial) {
      Laurent a = random_laurent(), b = random_laurent();
      CHECK(specialize(a * b, m) == specialize(a, m) * specialize(b, m));
      CHECK(specialize(a + b, m) == specialize(a, m) + specialize(b, m));
      // divide_limit(p * (q^m-1) * m, m) == specialize(p, m)
      Laurent f = a * (Laurent::q_power((long)m) - Laurent(1)).scaled((long)m);
      CHECK(divide_limit(f, m) == specialize(a, m));
    }
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  Cyc z = Cyc::zeta(5);
  Cyc acc(5, 1);
  for (int k = 0; k < 5; ++k) acc *= z;
  CHECK(acc == Cyc(5, 1)); // zeta^5 = 1
  // 1 + z + z^2 + z^3 + z^4 = 0
  Cyc s(5, 0);
  for (int k = 0; k < 5; ++k) s += z.pow(k);
  CHECK(s.is_zero());
  // inverse
  Cyc a = z + Cyc(5, 3);
  CHECK(a * a.inverse() == Cyc(5, 1));
  CHECK(z.pow(-1) == z.pow(4));
  CHECK(!z.is_rational());
  CHECK(Cyc(5, Rat(7, 2)).is_rational());
}
