#include "qma/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "qma/detcenter.hpp"
#include "qma/engine.hpp"
#include "qma/poisson.hpp"
#include "qma/semidirect.hpp"
#include "qma/skewform.hpp"
#include "qma/variety.hpp"
#include "qma/verma.hpp"

namespace qma {

namespace {

using Check = std::pair<bool, std::string>;

Int ipow(long b, long e) {
  Int r = 1;
  for (long t = 0; t < e; ++t) r *= b;
  return r;
}

std::string istr(const Int &v) { return v.str(); }

const std::vector<Family> kNamed{Family::standard, Family::dipper, Family::j0, Family::jz,
                                 Family::jn};

// ---- criterion 1: degrees ---------------------------------------------------

Check degrees_check(int n, long m) {
  std::ostringstream note;
  bool ok = true;
  auto expect_eq = [&](const char *what, const Int &got, const Int &want) {
    if (got != want) {
      ok = false;
      note << what << ": degree " << istr(got) << " != closed form " << istr(want) << "; ";
    }
  };
  long mp = mprime(m);
  expect_eq("M_q", degree_at(defining_matrix(AlgebraSpec::make(Family::standard, n)), m),
            ipow(m, n - 1) * ipow(mp, (long)(n - 2) * (n - 1) / 2));
  expect_eq("D_q", degree_at(dipper_donkin_matrix(n), m), ipow(m, (long)n * n / 2));
  expect_eq("J0", degree_at(defining_matrix(AlgebraSpec::make(Family::j0, n)), m),
            Int(m) * ipow(mp, ((long)n * n - n - 2) / 2));
  expect_eq("A_n", degree_at(defining_matrix(AlgebraSpec::make(Family::standard, n), true), m),
            ipow(m, 3 * n - 3) * ipow(mp, (long)(n - 2) * (n - 3) / 2));
  if (!ok && m % 2 == 0 && n >= 3)
    note << "(verified deviation from the quoted closed form: certified blocks are "
            "S(1)^{2n-1} S(2)^{(n-1)(n-2)/2}, degree "
         << istr(degree_at(defining_matrix(AlgebraSpec::make(Family::standard, n), true), m))
         << " = m^{2n-1} m'^{(n-1)(n-2)/2})";
  return {ok, note.str()};
}

// ---- criterion 2: canonical forms and ranks ---------------------------------

Check canonical_check(int n) {
  std::ostringstream note;
  bool ok = true;
  {
    CanonicalForm cf = skew_normal_form(defining_matrix(AlgebraSpec::make(Family::j0, n)));
    bool shape = cf.blocks.size() == size_t(n * n - n) / 2 && cf.zeros == n &&
                 cf.blocks[0] == 1;
    for (size_t b = 1; b < cf.blocks.size(); ++b) shape = shape && cf.blocks[b] == 2;
    if (!shape) {
      ok = false;
      note << "J0 blocks not (1,2,...,2); ";
    }
  }
  {
    CanonicalForm cf = skew_normal_form(defining_matrix(AlgebraSpec::make(Family::jz, n)));
    bool shape = cf.blocks.size() == size_t(n * n - n) / 2 && cf.zeros == n;
    for (const Int &b : cf.blocks) shape = shape && b == 2;
    if (!shape || 2 * (long)cf.blocks.size() != (long)n * n - n) {
      ok = false;
      note << "Jz blocks/rank mismatch; ";
    }
  }
  {
    long rk = rank(defining_matrix(AlgebraSpec::make(Family::jn, n)));
    long expect = n % 2 == 0 ? (long)n * n : (long)n * n - 1;
    if (rk != expect) {
      ok = false;
      note << "Jn rank " << rk << " != " << expect;
      if (n == 2)
        note << " (verified deviation: J^n_q(2) has the defining matrix of M_q(2), rank 2)";
    }
  }
  return {ok, note.str()};
}

// ---- criterion 3: PBW / confluence ------------------------------------------

Check diamond_check(Family f, int n) {
  Engine e(AlgebraSpec::make(f, n));
  std::vector<NCPoly> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gens.push_back(e.gen(i, j));
  for (const NCPoly &x : gens)
    for (const NCPoly &y : gens)
      for (const NCPoly &z : gens)
        if (!(e.multiply(e.multiply(x, y), z) == e.multiply(x, e.multiply(y, z))))
          return {false, "associativity diamond failed"};
  return {true, ""};
}

// ---- criterion 4: Laplace -----------------------------------------------------

Check laplace_standard_check(int n) {
  Engine e(AlgebraSpec::make(Family::standard, n));
  for (LaplaceMode mode : {LaplaceMode::row_za, LaplaceMode::row_az, LaplaceMode::col_za,
                           LaplaceMode::col_az})
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        LaplaceReport rep = laplace_check(e, mode, i, k);
        if (!rep.pass) return {false, "mode " + std::to_string((int)mode) + " failed"};
        if (i == k)
          for (long ex : rep.exponents)
            if (ex != 0) return {false, "nonzero exponent in the untwisted case"};
      }
  return {true, ""};
}

Check laplace_modified_check(Family f) {
  Engine e(AlgebraSpec::make(f, 2));
  for (LaplaceMode mode : {LaplaceMode::row_za, LaplaceMode::row_az, LaplaceMode::col_za,
                           LaplaceMode::col_az})
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k) {
        LaplaceReport rep = laplace_check(e, mode, i, k);
        if (!rep.pass || !rep.affine)
          return {false, family_name(f) + " solver failed: " + rep.note};
      }
  return {true, "solved exponents affine in the pairing data"};
}

// ---- criterion 5: centers -----------------------------------------------------

Check center_check(Family f, int n, unsigned m) {
  Engine e(AlgebraSpec::make(f, n));
  auto gens = center_generators(e, m);
  std::ostringstream note;
  bool ok = true;
  for (const auto &[name, pass] : center_certify(e, gens, m))
    if (!pass) {
      ok = false;
      note << name << " not central; ";
    }
  if (ok) note << gens.size() << " generators certified central";
  return {ok, note.str()};
}

// ---- criterion 6: root-of-unity identities ------------------------------------

Check power_central_check(Family f, int n, unsigned m) {
  Engine e(AlgebraSpec::make(f, n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!e.central_check(e.power(e.gen(i, j), (long)m), m))
        return {false, "Z^m not central"};
  return {true, ""};
}

Check qprop_check_crit(int n, unsigned m) {
  Engine e(AlgebraSpec::make(Family::standard, n));
  if (!qprop_root(e, m)) return {false, "det_q^m != det(Z^m) at zeta_m"};
  if (!qprop_generic_fails(e, m)) return {false, "identity unexpectedly holds generically"};
  return {true, ""};
}

// ---- criterion 7: Poisson oracle ----------------------------------------------

Check oracle_check(int n, unsigned m) {
  OracleVerdict v = oracle_verdict(n, m);
  if (!v.row_col_match) return {false, "row/column case mismatch"};
  if (!v.vanishing_match) return {false, "vanishing case mismatch"};
  std::string verdict = v.fourth_is_classical
                            ? "fourth case = 2 a_it a_sj (classical reading; the displayed "
                              "2 Z_st Z_ij does not match)"
                            : (v.fourth_is_displayed ? "fourth case matches the display"
                                                     : "fourth case matches neither reading");
  return {v.fourth_is_classical || v.fourth_is_displayed, verdict};
}

Check jacobi_check(Family f, int n) {
  Engine e(AlgebraSpec::make(f, n));
  BracketTable t = bracket_table(e, 3);
  return {jacobi_holds(t), ""};
}

// ---- criterion 8: leaf dimensions ----------------------------------------------

Check leaf_check(int n) {
  WeylElement wl = WeylElement::longest(n);
  std::ostringstream note;
  bool ok = true;
  if (l_omega_rank(Family::j0, n, wl) != 0 || l_omega_rank(Family::jz, n, wl) != 0) {
    ok = false;
    note << "L_omega not zero for J0/Jz; ";
  }
  int expect = n % 2 == 0 ? n : n - 1;
  if (l_omega_rank(Family::dipper, n, wl) != expect) {
    ok = false;
    note << "D rank != " << expect << "; ";
  }
  int got = l_omega_rank(Family::jn, n, wl);
  if (got != expect) {
    ok = false;
    note << "Jn rank " << got << " != " << expect;
    if (n == 2)
      note << " (verified deviation: J^n_q(2) = M_q(2), standard structure, L_omega = 0)";
  }
  return {ok, note.str()};
}

// ---- criterion 9: minor ideal ---------------------------------------------------

Check minor_ideal_crit(int n) {
  MinorIdealReport rep = minor_ideal_check(n);
  std::ostringstream note;
  if (!rep.lemma1) note << "first minor-bracket lemma failed; ";
  if (!rep.lemma2) note << "second minor-bracket lemma failed; ";
  if (!rep.ideal) note << "2x2 minor ideal not Hamiltonian-invariant; ";
  return {rep.lemma1 && rep.lemma2 && rep.ideal, note.str()};
}

// ---- criterion 10: Verma modules -------------------------------------------------

Check verma_dim_check(int n, unsigned m) {
  std::vector<Cyc> lam(n, Cyc(m, 1));
  ModuleRep r = build_restricted_verma(AlgebraSpec::make(Family::standard, n), m, lam);
  if (Int(r.dim) != ipow(mprime((long)m), (long)n * (n - 1) / 2))
    return {false, "restricted dimension mismatch"};
  ModuleRep r0 = build_min_generalized_verma_j0(n, m, lam, Cyc(m, 1));
  if (Int(r0.dim) != Int((long)m) * ipow(mprime((long)m), ((long)n * n - n - 2) / 2))
    return {false, "J0 minimal dimension mismatch"};
  if (m % 2 == 1) {
    if (Int(r.dim) != degree_at(defining_matrix(AlgebraSpec::make(Family::standard, n)), (long)m))
      return {false, "restricted dimension != degree"};
    if (Int(r0.dim) != degree_at(defining_matrix(AlgebraSpec::make(Family::j0, n)), (long)m))
      return {false, "J0 minimal dimension != degree"};
  }
  return {true, "dim " + std::to_string(r.dim) + " / " + std::to_string(r0.dim)};
}

Check verma_irred_check(unsigned m) {
  std::vector<Cyc> lam(2, Cyc(m, 1));
  ModuleRep good = build_restricted_verma(AlgebraSpec::make(Family::standard, 2), m, lam);
  if (!verify_rep(good)) return {false, "relations fail on the module"};
  if (!irreducible(good)) return {false, "nonzero-lambda module not irreducible"};
  lam[1] = Cyc(m, 0);
  ModuleRep bad = build_restricted_verma(AlgebraSpec::make(Family::standard, 2), m, lam);
  if (irreducible(bad)) return {false, "zero-lambda module claims irreducible"};
  return {true, ""};
}

Check verma_j0_irred_check(int n, unsigned m) {
  std::vector<Cyc> lam(n, Cyc(m, 1));
  ModuleRep rep = build_min_generalized_verma_j0(n, m, lam, Cyc(m, 1));
  if (rep.dim <= 16 && !verify_rep(rep)) return {false, "relations fail on the module"};
  if (!irreducible(rep)) return {false, "not irreducible at Lambda = 1, phi = 1"};
  return {true, "dim " + std::to_string(rep.dim)};
}

// ---- criterion 11: varieties -----------------------------------------------------

Check variety_check_crit(int n, std::uint64_t seed) {
  std::mt19937 rng((unsigned)seed);
  std::uniform_int_distribution<int> pos(1, n), val(2, 9);
  for (Family f : {Family::j0, Family::jz, Family::dipper, Family::jn}) {
    auto ws = variety_witnesses(f, n);
    for (const VarietyWitness &w : ws)
      if (!variety_membership(f, n, w.A, w.B, QValue::symbolic()))
        return {false, w.name + " is not a member"};
    for (int t = 0; t < 100; ++t) {
      const VarietyWitness &w = ws[t % ws.size()];
      QMatrix B = w.B;
      B.at(pos(rng), pos(rng)) += Laurent(val(rng));
      if (variety_membership(f, n, w.A, B, QValue::symbolic()))
        return {false, family_name(f) + " perturbation stayed in the variety"};
    }
  }
  return {true, "witnesses member; 400 seeded perturbations rejected"};
}

// ---- criterion 12: bialgebra ------------------------------------------------------

Check bialgebra_check(int n) {
  if (!coproduct_check(n, CoproductRule{1, 0})) return {false, "rule (1,0) failed"};
  if (!coproduct_check(n, CoproductRule{0, 1})) return {false, "rule (0,1) failed"};
  if (coproduct_check(n, CoproductRule{2, 0})) return {false, "negative control (2,0) passed"};
  return {true, ""};
}

} // namespace

std::vector<SuiteCheck> suite_checks(std::uint64_t seed) {
  std::vector<SuiteCheck> checks;
  auto add = [&](std::string id, std::string tag, bool quick,
                 std::function<Check()> fn) {
    checks.push_back({std::move(id), std::move(tag), quick, std::move(fn)});
  };

  // 1. degrees
  for (int n : {2, 3, 4})
    for (long m : {3L, 4L, 5L})
      add("01-degrees.n" + std::to_string(n) + ".m" + std::to_string(m),
          "degree closed forms M_q / D_q / J0 / A_n", n <= 2,
          [n, m] { return degrees_check(n, m); });

  // 2. canonical forms / ranks
  for (int n : {2, 3, 4, 5})
    add("02-canonical.n" + std::to_string(n), "canonical forms J0, Jz; rank Jn", n <= 2,
        [n] { return canonical_check(n); });

  // 3. PBW / confluence
  for (Family f : kNamed)
    for (int n : {2, 3})
      add("03-diamond." + family_name(f) + ".n" + std::to_string(n),
          "PBW confluence (iterated Ore extension)", n <= 2, [f, n] { return diamond_check(f, n); });

  // 4. Laplace
  for (int n : {2, 3})
    add("04-laplace.standard.n" + std::to_string(n), "quantum Laplace expansions (Parshall-Wang)", n <= 2,
        [n] { return laplace_standard_check(n); });
  for (Family f : {Family::j0, Family::jz})
    add("04-laplace.modified." + family_name(f), "modified Laplace exponent solver", true,
        [f] { return laplace_modified_check(f); });

  // 5. centers
  for (int n : {2, 3}) {
    for (unsigned m : {3u, 4u})
      add("05-center.j0.n" + std::to_string(n) + ".m" + std::to_string(m), "J0 center generators at zeta_m",
          n <= 2, [n, m] { return center_check(Family::j0, n, m); });
    add("05-center.jz.n" + std::to_string(n) + ".m3", "Jz center generators at zeta_m", n <= 2,
        [n] { return center_check(Family::jz, n, 3); });
  }

  // 6. root-of-unity identities
  for (Family f : kNamed)
    for (int n : {2, 3})
      for (unsigned m : {3u, 4u, 5u})
        add("06-power-central." + family_name(f) + ".n" + std::to_string(n) + ".m" +
                std::to_string(m),
            "Z^m central at zeta_m", n <= 2, [f, n, m] { return power_central_check(f, n, m); });
  for (int n : {2, 3})
    add("06-qprop.n" + std::to_string(n), "det_q^m = det(Z^m) at zeta_m", n <= 2,
        [n] { return qprop_check_crit(n, 3); });
  add("06-coproduct-power.n2.m3", "Delta(Z^m) = sum Z^m (x) Z^m at zeta_m", true,
      [] { return Check{coproduct_power_check(2, 3) && coproduct_power_generic_fails(2, 3), ""}; });

  // 7. Poisson oracle
  for (int n : {2, 3})
    for (unsigned m : {3u, 5u})
      add("07-oracle.n" + std::to_string(n) + ".m" + std::to_string(m), "semiclassical oracle vs standard bracket table",
          n <= 2, [n, m] { return oracle_check(n, m); });
  for (Family f : kNamed)
    for (int n : {2, 3})
      add("07-jacobi." + family_name(f) + ".n" + std::to_string(n), "Jacobi identity of the bracket table",
          n <= 2, [f, n] { return jacobi_check(f, n); });

  // 8. leaf dimensions
  for (int n = 2; n <= 6; ++n)
    add("08-leaf.n" + std::to_string(n), "longest-element leaf rank", true,
        [n] { return leaf_check(n); });

  // 9. minor ideal
  add("09-minor-ideal.n3", "minor-bracket expansions; Hamiltonian invariance of minor ideals", false,
      [] { return minor_ideal_crit(3); });
  add("09-minor-ideal.n2", "minor-bracket expansions (trivial case)", true,
      [] { return minor_ideal_crit(2); });

  // 10. Verma modules
  for (int n : {2, 3})
    for (unsigned m : {3u, 4u, 5u})
      add("10-verma-dim.n" + std::to_string(n) + ".m" + std::to_string(m),
          "Verma dimensions vs degree", n <= 2, [n, m] { return verma_dim_check(n, m); });
  for (unsigned m : {3u, 4u})
    add("10-verma-irred.n2.m" + std::to_string(m), "restricted Verma irreducibility iff lambda nonzero", true,
        [m] { return verma_irred_check(m); });
  for (int n : {2, 3})
    for (unsigned m : {3u, 4u})
      add("10-verma-j0.n" + std::to_string(n) + ".m" + std::to_string(m), "J0 minimal Verma irreducible at Lambda = 1, phi = 1",
          n <= 2, [n, m] { return verma_j0_irred_check(n, m); });

  // 11. varieties
  for (int n : {2, 3})
    add("11-variety.n" + std::to_string(n), "associated-variety witnesses and perturbations", n <= 2,
        [n, seed] { return variety_check_crit(n, seed); });

  // 12. bialgebra
  for (int n : {2, 3})
    add("12-bialgebra.n" + std::to_string(n), "coproduct structure on the extended algebra", n <= 2,
        [n] { return bialgebra_check(n); });

  return checks;
}

std::vector<SuiteResult> run_suite(bool full, std::uint64_t seed) {
  std::vector<SuiteCheck> checks = suite_checks(seed);
  std::vector<SuiteCheck> selected;
  for (auto &c : checks)
    if (full || c.quick) selected.push_back(std::move(c));

  unsigned threads = 1;
  if (const char *env = std::getenv("QMA_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) threads = (unsigned)std::min<long>(v, std::thread::hardware_concurrency());
  }

  std::vector<SuiteResult> results(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t t = next.fetch_add(1);
      if (t >= selected.size()) break;
      auto start = std::chrono::steady_clock::now();
      SuiteResult r;
      r.id = selected[t].id;
      r.tag = selected[t].tag;
      try {
        auto [pass, detail] = selected[t].run();
        r.pass = pass;
        r.detail = detail;
      } catch (const std::exception &ex) {
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results[t] = std::move(r);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
  }
  std::sort(results.begin(), results.end(),
            [](const SuiteResult &a, const SuiteResult &b) { return a.id < b.id; });
  return results;
}

} // namespace qma
