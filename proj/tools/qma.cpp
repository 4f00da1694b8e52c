// Batch front end: constructs algebra specifications, runs the workbench
// computations and the verification suite, and emits machine-readable
// reports.  Exit codes: 0 success, 1 failed verification, 2 usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "qma/detcenter.hpp"
#include "qma/json_io.hpp"
#include "qma/poisson.hpp"
#include "qma/semidirect.hpp"
#include "qma/suite.hpp"
#include "qma/variety.hpp"
#include "qma/verma.hpp"

using namespace qma;
using nlohmann::json;

namespace {

struct SpecOpts {
  std::string family = "standard";
  int n = 2;
  std::string wp_file;

  AlgebraSpec resolve() const {
    if (!wp_file.empty()) {
      std::ifstream in(wp_file);
      if (!in) throw CLI::ValidationError("--wp", "cannot open " + wp_file);
      json j;
      in >> j;
      return spec_from_json(j);
    }
    return AlgebraSpec::make(family_from_name(family), n);
  }
};

void add_spec_opts(CLI::App *cmd, SpecOpts &o) {
  cmd->add_option("--family", o.family, "standard|dipper|j0|jz|jn|custom");
  cmd->add_option("--n", o.n, "matrix size (>= 2)");
  cmd->add_option("--wp", o.wp_file, "JSON file with a full algebra specification");
}

// word syntax: whitespace-separated "Zij", "Lk", "Lk^-1", slot prefix "2:"
Word parse_word(const std::string &text, int n) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int slot = 0;
    std::string t = tok;
    if (t.rfind("2:", 0) == 0) { slot = 1; t = t.substr(2); }
    else if (t.rfind("1:", 0) == 0) { t = t.substr(2); }
    if (t.empty()) throw CLI::ValidationError("--word", "empty token");
    if (t[0] == 'Z' || t[0] == 'z') {
      if (t.size() != 3 || !isdigit(t[1]) || !isdigit(t[2]))
        throw CLI::ValidationError("--word", "bad Z token: " + tok);
      w.push_back(Letter::Z(t[1] - '0', t[2] - '0', slot));
    } else if (t[0] == 'L' || t[0] == 'l') {
      long e = 1;
      auto caret = t.find('^');
      std::string idx = caret == std::string::npos ? t.substr(1) : t.substr(1, caret - 1);
      if (caret != std::string::npos) e = std::stol(t.substr(caret + 1));
      int k = std::stoi(idx);
      if (k < 1 || k > 2 * n - 1) throw CLI::ValidationError("--word", "L index out of range");
      w.push_back(Letter::L(k - 1, e, slot));
    } else {
      throw CLI::ValidationError("--word", "unknown token: " + tok);
    }
  }
  return w;
}

std::vector<int> parse_index_list(const std::string &s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void emit(const json &j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"quantized matrix algebra workbench"};
  app.require_subcommand(1);
  bool csv = false;
  app.add_flag("--csv", csv, "CSV output where supported (degree/dimension tables)");
  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "seed for randomized checks");

  int exit_code = 0;

  // defining-matrix
  {
    auto *cmd = app.add_subcommand("defining-matrix", "integer skew defining matrix");
    auto opts = std::make_shared<SpecOpts>();
    auto with_l = std::make_shared<bool>(false);
    add_spec_opts(cmd, *opts);
    cmd->add_flag("--with-l", *with_l, "extend by the 2n-1 L generators");
    cmd->callback([opts, with_l] {
      emit(matrix_to_json(defining_matrix(opts->resolve(), *with_l)));
    });
  }

  // canonical-form
  {
    auto *cmd = app.add_subcommand("canonical-form", "certified skew canonical form");
    auto opts = std::make_shared<SpecOpts>();
    auto with_l = std::make_shared<bool>(false);
    add_spec_opts(cmd, *opts);
    cmd->add_flag("--with-l", *with_l);
    cmd->callback([opts, with_l] {
      emit(canonical_to_json(skew_normal_form(defining_matrix(opts->resolve(), *with_l))));
    });
  }

  // degree
  {
    auto *cmd = app.add_subcommand("degree", "De Concini-Procesi degree at a root of unity");
    auto opts = std::make_shared<SpecOpts>();
    auto m = std::make_shared<long>(3);
    auto with_l = std::make_shared<bool>(false);
    add_spec_opts(cmd, *opts);
    cmd->add_option("--m", *m, "root of unity order");
    cmd->add_flag("--with-l", *with_l);
    cmd->callback([opts, m, with_l, &csv] {
      Int d = degree_at(defining_matrix(opts->resolve(), *with_l), *m);
      if (csv)
        std::cout << "family,n,m,degree\n"
                  << opts->family << "," << opts->n << "," << *m << "," << d.str() << "\n";
      else
        emit(json{{"degree", d.str()}, {"family", opts->family}, {"n", opts->n}, {"m", *m}});
    });
  }

  // straighten
  {
    auto *cmd = app.add_subcommand("straighten", "normal-order a word in the generators");
    auto opts = std::make_shared<SpecOpts>();
    auto word = std::make_shared<std::string>();
    auto with_l = std::make_shared<bool>(false);
    auto tensor = std::make_shared<bool>(false);
    add_spec_opts(cmd, *opts);
    cmd->add_option("--word", *word, "e.g. \"Z22 Z11\" or \"L1 Z12 L1^-1\"")->required();
    cmd->add_flag("--with-l", *with_l);
    cmd->add_flag("--tensor", *tensor, "enable the second tensor slot");
    cmd->callback([opts, word, with_l, tensor] {
      AlgebraSpec spec = opts->resolve();
      bool needs_l = word->find('L') != std::string::npos || word->find('l') != std::string::npos;
      Engine e(spec, *with_l || needs_l, *tensor || word->find("2:") != std::string::npos);
      emit(ncpoly_to_json(e, e.straighten(parse_word(*word, spec.n))));
    });
  }

  // det
  {
    auto *cmd = app.add_subcommand("det", "modified quantum determinant / minor");
    auto opts = std::make_shared<SpecOpts>();
    auto rows = std::make_shared<std::string>(), cols = std::make_shared<std::string>();
    add_spec_opts(cmd, *opts);
    cmd->add_option("--rows", *rows, "comma-separated row set (default all)");
    cmd->add_option("--cols", *cols, "comma-separated column set (default all)");
    cmd->callback([opts, rows, cols] {
      AlgebraSpec spec = opts->resolve();
      Engine e(spec);
      NCPoly d;
      if (rows->empty() && cols->empty()) d = qdet_full(e);
      else {
        MinorSpec ms{parse_index_list(*rows), parse_index_list(*cols)};
        d = qdet(e, ms);
      }
      emit(ncpoly_to_json(e, d));
    });
  }

  // laplace-check
  {
    auto *cmd = app.add_subcommand("laplace-check", "quantum / modified Laplace expansions");
    auto opts = std::make_shared<SpecOpts>();
    auto mode = std::make_shared<std::string>("row-za");
    auto i = std::make_shared<int>(1), k = std::make_shared<int>(1);
    add_spec_opts(cmd, *opts);
    cmd->add_option("--mode", *mode, "row-za|row-az|col-za|col-az");
    cmd->add_option("--i", *i);
    cmd->add_option("--k", *k);
    cmd->callback([opts, mode, i, k, &exit_code] {
      AlgebraSpec spec = opts->resolve();
      Engine e(spec);
      LaplaceMode lm = *mode == "row-za"   ? LaplaceMode::row_za
                       : *mode == "row-az" ? LaplaceMode::row_az
                       : *mode == "col-za" ? LaplaceMode::col_za
                                           : LaplaceMode::col_az;
      LaplaceReport rep = laplace_check(e, lm, *i, *k);
      emit(json{{"pass", rep.pass},
                {"exponents", rep.exponents},
                {"affine", rep.affine},
                {"note", rep.note}});
      if (!rep.pass) exit_code = 1;
    });
  }

  // center-check
  {
    auto *cmd = app.add_subcommand("center-check", "certify the center generator lists at zeta_m");
    auto opts = std::make_shared<SpecOpts>();
    auto m = std::make_shared<unsigned>(3);
    auto psi_phi = std::make_shared<bool>(true);
    add_spec_opts(cmd, *opts);
    cmd->add_option("--m", *m, "root of unity order (>= 3)");
    cmd->add_flag("!--psi-as-phi", *psi_phi, "read psi_j in Omega(n) as phi_j instead of phi*_j");
    cmd->callback([opts, m, psi_phi, &exit_code] {
      AlgebraSpec spec = opts->resolve();
      Engine e(spec);
      auto gens = center_generators(e, *m, *psi_phi);
      json out = json::array();
      for (const auto &[name, pass] : center_certify(e, gens, *m)) {
        out.push_back(json{{"generator", name}, {"central", pass}});
        if (!pass) exit_code = 1;
      }
      emit(out);
    });
  }

  // poisson-table
  {
    auto *cmd = app.add_subcommand("poisson-table", "semiclassical bracket table");
    auto opts = std::make_shared<SpecOpts>();
    auto m = std::make_shared<unsigned>(3);
    add_spec_opts(cmd, *opts);
    cmd->add_option("--m", *m);
    cmd->callback([opts, m] {
      AlgebraSpec spec = opts->resolve();
      Engine e(spec);
      BracketTable t = bracket_table(e, *m);
      json out = json::array();
      const int n = spec.n;
      for (const auto &[key, br] : t.entries) {
        json terms = json::array();
        for (const auto &[mono, c] : br) {
          json mexp = json::array();
          for (int idx = 0; idx < n * n; ++idx) mexp.push_back(mono[idx]);
          terms.push_back(json{{"coeff_num", numerator(c).str()},
                               {"coeff_den", denominator(c).str()},
                               {"exponents", mexp}});
        }
        out.push_back(json{{"x", "a" + std::to_string(key.first / n + 1) +
                                     std::to_string(key.first % n + 1)},
                           {"y", "a" + std::to_string(key.second / n + 1) +
                                     std::to_string(key.second % n + 1)},
                           {"bracket", terms}});
      }
      emit(json{{"jacobi", true}, {"entries", out}});
    });
  }

  // poisson-oracle
  {
    auto *cmd = app.add_subcommand("poisson-oracle", "standard bracket table comparison and fourth-case verdict");
    auto n = std::make_shared<int>(2);
    auto m = std::make_shared<unsigned>(3);
    cmd->add_option("--n", *n);
    cmd->add_option("--m", *m);
    cmd->callback([n, m, &exit_code] {
      OracleVerdict v = oracle_verdict(*n, *m);
      emit(json{{"row_col_match", v.row_col_match},
                {"vanishing_match", v.vanishing_match},
                {"fourth_is_classical", v.fourth_is_classical},
                {"fourth_is_displayed", v.fourth_is_displayed}});
      if (!v.row_col_match || !v.vanishing_match) exit_code = 1;
    });
  }

  // leaf-dim
  {
    auto *cmd = app.add_subcommand("leaf-dim", "symplectic leaf dimension 2 l(w) + rank L_w");
    auto opts = std::make_shared<SpecOpts>();
    auto omega = std::make_shared<std::string>();
    add_spec_opts(cmd, *opts);
    cmd->add_option("--omega", *omega, "permutation as comma-separated images (default longest)");
    cmd->callback([opts, omega] {
      Family f = family_from_name(opts->family);
      WeylElement w;
      if (omega->empty()) w = WeylElement::longest(opts->n);
      else w.perm = parse_index_list(*omega);
      emit(json{{"length", w.length()},
                {"rank", l_omega_rank(f, opts->n, w)},
                {"dimension", leaf_dimension(f, opts->n, w)}});
    });
  }

  // variety-check
  {
    auto *cmd = app.add_subcommand("variety-check", "associated-variety witness membership");
    auto opts = std::make_shared<SpecOpts>();
    add_spec_opts(cmd, *opts);
    cmd->callback([opts, &exit_code] {
      Family f = family_from_name(opts->family);
      json out = json::array();
      for (const VarietyWitness &w : variety_witnesses(f, opts->n)) {
        bool member = variety_membership(f, opts->n, w.A, w.B, QValue::symbolic());
        out.push_back(json{{"witness", w.name}, {"member", member}});
        if (!member) exit_code = 1;
      }
      emit(out);
    });
  }

  // verma
  {
    auto *cmd = app.add_subcommand("verma", "restricted / minimally generalized Verma module");
    auto opts = std::make_shared<SpecOpts>();
    auto m = std::make_shared<unsigned>(3);
    auto lambda = std::make_shared<std::string>();
    auto minimal = std::make_shared<bool>(false);
    auto phi = std::make_shared<long>(1);
    auto out_file = std::make_shared<std::string>();
    add_spec_opts(cmd, *opts);
    cmd->add_option("--m", *m);
    cmd->add_option("--lambda", *lambda, "comma-separated rational highest weight (default all 1)");
    cmd->add_flag("--j0-minimal", *minimal, "build the J0 minimally generalized module");
    cmd->add_option("--phi", *phi, "phi value for the J0 minimal module");
    cmd->add_option("--out", *out_file, "write the full matrix representation as JSON");
    cmd->callback([opts, m, lambda, minimal, phi, out_file, &csv] {
      AlgebraSpec spec = opts->resolve();
      std::vector<Cyc> lam(spec.n, Cyc(*m, 1));
      if (!lambda->empty()) {
        auto vals = parse_index_list(*lambda);
        for (size_t t = 0; t < vals.size() && t < lam.size(); ++t) lam[t] = Cyc(*m, vals[t]);
      }
      ModuleRep rep = *minimal
                          ? build_min_generalized_verma_j0(spec.n, *m, lam, Cyc(*m, *phi))
                          : build_restricted_verma(spec, *m, lam);
      bool irr = irreducible(rep);
      bool ok = verify_rep(rep);
      if (csv)
        std::cout << "family,n,m,dimension,irreducible\n"
                  << opts->family << "," << spec.n << "," << *m << "," << rep.dim << ","
                  << (irr ? 1 : 0) << "\n";
      else
        emit(json{{"dimension", rep.dim}, {"irreducible", irr}, {"relations_verified", ok}});
      if (!out_file->empty()) {
        std::ofstream of(*out_file);
        of << module_to_json(rep).dump() << "\n";
      }
    });
  }

  // coproduct-check
  {
    auto *cmd = app.add_subcommand("coproduct-check", "coproduct structure checks on the extended algebra");
    auto n = std::make_shared<int>(2);
    auto a = std::make_shared<long>(1), b = std::make_shared<long>(0);
    cmd->add_option("--n", *n);
    cmd->add_option("--a", *a, "L_beta split exponent a");
    cmd->add_option("--b", *b, "L_beta split exponent b");
    cmd->callback([n, a, b, &exit_code] {
      bool ok = coproduct_check(*n, CoproductRule{*a, *b});
      emit(json{{"pass", ok}, {"a", *a}, {"b", *b}});
      if (!ok) exit_code = 1;
    });
  }

  // suite
  {
    auto *cmd = app.add_subcommand("suite", "run the verification battery");
    auto level = std::make_shared<std::string>("quick");
    cmd->add_option("--level", *level, "quick|full");
    cmd->callback([level, &seed, &exit_code] {
      auto results = run_suite(*level == "full", seed);
      json out = json::array();
      int failed = 0;
      for (const auto &r : results) {
        out.push_back(json{{"id", r.id}, {"tag", r.tag}, {"pass", r.pass}, {"detail", r.detail}});
        if (!r.pass) ++failed;
      }
      emit(json{{"level", *level},
                {"checks", results.size()},
                {"failed", failed},
                {"results", out}});
      if (failed) exit_code = 1;
    });
  }

  for (CLI::App *sc : app.get_subcommands([](const CLI::App *) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return exit_code;
}
