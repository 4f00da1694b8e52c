#include "qma/detcenter.hpp"

#include "qma/skewform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qma {

namespace {

long inversions(const std::vector<int> &perm) {
  long inv = 0;
  for (size_t a = 0; a < perm.size(); ++a)
    for (size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

// E(sigma) = sum_{r<s} (alpha_{i_s, c_s} | zeta_{i_r} + xi_{c_r})
long weight_shift(const AlgebraSpec &spec, const std::vector<int> &rows,
                  const std::vector<int> &cols_of_rows) {
  long acc = 0;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t s = r + 1; s < rows.size(); ++s) {
      acc += pairing_alpha(spec.n, rows[s], cols_of_rows[s], spec.zetas[rows[r] - 1]);
      acc += pairing_alpha(spec.n, rows[s], cols_of_rows[s], spec.xis[cols_of_rows[r] - 1]);
    }
  return acc;
}

void check_minor(const Engine &e, const MinorSpec &m) {
  if (m.rows.empty() || m.rows.size() != m.cols.size())
    throw std::invalid_argument("qdet: minor index sets must be nonempty of equal size");
  for (size_t t = 0; t < m.rows.size(); ++t) {
    if (m.rows[t] < 1 || m.rows[t] > e.n() || m.cols[t] < 1 || m.cols[t] > e.n())
      throw std::invalid_argument("qdet: minor index out of range");
    if (t > 0 && (m.rows[t] <= m.rows[t - 1] || m.cols[t] <= m.cols[t - 1]))
      throw std::invalid_argument("qdet: minor index sets must be strictly increasing");
  }
}

} // namespace

NCPoly qdet(const Engine &e, const MinorSpec &minor) {
  check_minor(e, minor);
  const AlgebraSpec &spec = e.spec();
  const size_t p = minor.rows.size();
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> id_cols(p);
  for (size_t r = 0; r < p; ++r) id_cols[r] = minor.cols[r];
  const long e_id = weight_shift(spec, minor.rows, id_cols);

  NCPoly result;
  do {
    std::vector<int> cols(p);
    for (size_t r = 0; r < p; ++r) cols[r] = minor.cols[perm[r]];
    long l = inversions(perm);
    long shift = e_id - weight_shift(spec, minor.rows, cols);
    Monomial m = e.scalar_monomial();
    for (size_t r = 0; r < p; ++r) m.z1[(minor.rows[r] - 1) * e.n() + (cols[r] - 1)] += 1;
    Laurent coeff = Laurent::q_power(l + shift, (l % 2 == 0) ? Rat(1) : Rat(-1));
    nc_add(result, m, coeff);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

NCPoly qdet_full(const Engine &e) {
  MinorSpec m;
  m.rows.resize(e.n());
  m.cols.resize(e.n());
  std::iota(m.rows.begin(), m.rows.end(), 1);
  std::iota(m.cols.begin(), m.cols.end(), 1);
  return qdet(e, m);
}

long minor_weight_pairing(int n, const MinorSpec &minor, const Weight &w) {
  long acc = 0;
  for (size_t t = 0; t < minor.rows.size(); ++t)
    acc += pairing_alpha(n, minor.rows[t], minor.cols[t], w);
  return acc;
}

namespace {

MinorSpec complement_minor(int n, int row, int col) {
  MinorSpec m;
  for (int r = 1; r <= n; ++r)
    if (r != row) m.rows.push_back(r);
  for (int c = 1; c <= n; ++c)
    if (c != col) m.cols.push_back(c);
  return m;
}

// Exact solve of sum_j c_j T_j = L for scalars c_j in Q, with the Laurent
// data evaluated at a rational sample point q0; returns nullopt when the
// sampled system is inconsistent or underdetermined.
std::optional<std::vector<Rat>> sample_solve(const std::vector<NCPoly> &terms, const NCPoly &lhs,
                                             const Rat &q0) {
  std::map<Monomial, size_t> rows;
  for (const auto &t : terms)
    for (const auto &[m, c] : t) rows.emplace(m, rows.size());
  for (const auto &[m, c] : lhs) rows.emplace(m, rows.size());
  const size_t nr = rows.size(), nc = terms.size();
  std::vector<std::vector<Rat>> A(nr, std::vector<Rat>(nc + 1, Rat(0)));
  for (size_t j = 0; j < nc; ++j)
    for (const auto &[m, c] : terms[j]) A[rows[m]][j] = c.evaluate(q0);
  for (const auto &[m, c] : lhs) A[rows[m]][nc] = c.evaluate(q0);

  // Gaussian elimination
  size_t rank = 0;
  std::vector<int> pivot_col(nc, -1);
  for (size_t col = 0; col < nc && rank < nr; ++col) {
    size_t piv = rank;
    while (piv < nr && A[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(A[piv], A[rank]);
    Rat inv = Rat(1) / A[rank][col];
    for (size_t cc = col; cc <= nc; ++cc) A[rank][cc] *= inv;
    for (size_t r = 0; r < nr; ++r) {
      if (r == rank || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (size_t cc = col; cc <= nc; ++cc) A[r][cc] -= f * A[rank][cc];
    }
    pivot_col[col] = (int)rank;
    ++rank;
  }
  for (size_t r = rank; r < nr; ++r)
    if (A[r][nc] != 0) return std::nullopt; // inconsistent
  std::vector<Rat> sol(nc, Rat(0));
  for (size_t col = 0; col < nc; ++col) {
    if (pivot_col[col] < 0) return std::nullopt; // underdetermined
    sol[col] = A[pivot_col[col]][nc];
  }
  return sol;
}

// recognize c == q0^e exactly
std::optional<long> as_power_of(const Rat &c, const Rat &q0) {
  if (c <= 0) return std::nullopt;
  Rat v = c;
  long e = 0;
  while (v > 1) { v /= q0; ++e; if (e > 512) return std::nullopt; }
  while (v < 1) { v *= q0; --e; if (e < -512) return std::nullopt; }
  if (v != 1) return std::nullopt;
  return e;
}

} // namespace

LaplaceReport laplace_check(const Engine &e, LaplaceMode mode, int i, int k) {
  const int n = e.n();
  const AlgebraSpec &spec = e.spec();
  if (i < 1 || i > n || k < 1 || k > n)
    throw std::invalid_argument("laplace_check: indices out of range");

  // term_j and its alternating sign exponent, per mode
  std::vector<NCPoly> terms(n);
  std::vector<long> sign_exp(n);
  for (int j = 1; j <= n; ++j) {
    NCPoly t;
    switch (mode) {
      case LaplaceMode::row_za:
        t = e.multiply(e.gen(i, j), qdet(e, complement_minor(n, k, j)));
        sign_exp[j - 1] = j - k;
        break;
      case LaplaceMode::row_az:
        t = e.multiply(qdet(e, complement_minor(n, i, j)), e.gen(k, j));
        sign_exp[j - 1] = i - j;
        break;
      case LaplaceMode::col_za:
        t = e.multiply(e.gen(j, i), qdet(e, complement_minor(n, j, k)));
        sign_exp[j - 1] = j - k;
        break;
      case LaplaceMode::col_az:
        t = e.multiply(qdet(e, complement_minor(n, j, i)), e.gen(j, k));
        sign_exp[j - 1] = i - j;
        break;
    }
    long sg = sign_exp[j - 1];
    terms[j - 1] = nc_scale(t, Laurent::q_power(sg, sg % 2 == 0 ? Rat(1) : Rat(-1)));
  }
  NCPoly lhs = (i == k) ? qdet_full(e) : NCPoly{};

  LaplaceReport rep;

  // solve for the scalars at two sample points, then confirm symbolically
  std::vector<long> exps(n, 0);
  if (i == k) {
    auto s1 = sample_solve(terms, lhs, Rat(7, 3));
    auto s2 = sample_solve(terms, lhs, Rat(11, 5));
    if (!s1 || !s2) { rep.note = "unsolvable: sampled system degenerate"; return rep; }
    for (int j = 0; j < n; ++j) {
      auto e1 = as_power_of((*s1)[j], Rat(7, 3));
      auto e2 = as_power_of((*s2)[j], Rat(11, 5));
      if (!e1 || !e2 || *e1 != *e2) { rep.note = "unsolvable: scalar is not a q-power"; return rep; }
      exps[j] = *e1;
    }
  } else {
    // homogeneous case: normalize the last nonzero term's scalar to 1
    int last = n - 1;
    while (last >= 0 && terms[last].empty()) --last;
    if (last < 0) { rep.note = "all terms vanish"; return rep; }
    std::vector<NCPoly> sub(terms.begin(), terms.begin() + last);
    NCPoly rhs;
    for (const auto &[m, c] : terms[last]) nc_add(rhs, m, -c);
    auto s1 = sample_solve(sub, rhs, Rat(7, 3));
    auto s2 = sample_solve(sub, rhs, Rat(11, 5));
    if (!s1 || !s2) { rep.note = "unsolvable: sampled system degenerate"; return rep; }
    for (int j = 0; j < last; ++j) {
      auto e1 = as_power_of((*s1)[j], Rat(7, 3));
      auto e2 = as_power_of((*s2)[j], Rat(11, 5));
      if (!e1 || !e2 || *e1 != *e2) { rep.note = "unsolvable: scalar is not a q-power"; return rep; }
      exps[j] = *e1;
    }
    exps[last] = 0;
  }

  // symbolic confirmation
  NCPoly acc;
  for (int j = 0; j < n; ++j)
    acc = nc_sum(acc, nc_scale(terms[j], Laurent::q_power(exps[j])));
  rep.pass = (acc == lhs);
  rep.exponents = exps;
  if (!rep.pass) { rep.note = "verification failed"; return rep; }

  // affine-in-pairing-data check: compare against the closed form derived
  // from commuting the L-content of the cofactors into place,
  //   e_j = -(pairing) - E_id(minor) + delta_{ik} E_id(full) + const,
  // where the pairing is (w(minor) | zeta+xi) for Z A-orders and
  // (alpha | sum of the cofactor's zeta/xi) for A Z-orders.
  std::vector<long> predict(n, 0);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  MinorSpec full{all, all};
  long e_full = 0;
  {
    std::vector<int> cols(all.begin(), all.end());
    e_full = weight_shift(spec, all, cols);
  }
  for (int j = 1; j <= n; ++j) {
    MinorSpec cm;
    long pair_term = 0;
    switch (mode) {
      case LaplaceMode::row_za: {
        cm = complement_minor(n, k, j);
        Weight w = spec.zetas[i - 1] + spec.xis[j - 1];
        pair_term = minor_weight_pairing(n, cm, w);
        break;
      }
      case LaplaceMode::row_az: {
        cm = complement_minor(n, i, j);
        Weight v(n);
        for (int r = 1; r <= n; ++r) if (r != i) v = v + spec.zetas[r - 1];
        for (int t = 1; t <= n; ++t) if (t != j) v = v + spec.xis[t - 1];
        pair_term = pairing_alpha(n, k, j, v);
        break;
      }
      case LaplaceMode::col_za: {
        cm = complement_minor(n, j, k);
        Weight w = spec.zetas[j - 1] + spec.xis[i - 1];
        pair_term = minor_weight_pairing(n, cm, w);
        break;
      }
      case LaplaceMode::col_az: {
        cm = complement_minor(n, j, i);
        Weight v(n);
        for (int r = 1; r <= n; ++r) if (r != j) v = v + spec.zetas[r - 1];
        for (int t = 1; t <= n; ++t) if (t != i) v = v + spec.xis[t - 1];
        pair_term = pairing_alpha(n, j, k, v);
        break;
      }
    }
    std::vector<int> cm_cols = cm.cols;
    predict[j - 1] = -pair_term - weight_shift(spec, cm.rows, cm_cols) + (i == k ? e_full : 0);
  }
  std::optional<long> offset;
  rep.affine = true;
  for (int j = 0; j < n; ++j) {
    if (terms[j].empty()) continue;
    long d = exps[j] - predict[j];
    if (!offset) offset = d;
    else if (*offset != d) rep.affine = false;
  }
  if (i == k && rep.affine && offset && *offset != 0) rep.affine = false;
  return rep;
}

// The transpose anti-automorphism.  On the Jz relations the index swap is
// consistent only together with the bar involution q -> q^{-1}, so tau
// reverses words, transposes indices and bars the coefficients.
NCPoly tau_transpose(const Engine &e, const NCPoly &p) {
  NCPoly out;
  for (const auto &[m, c] : p) {
    Word w = e.letters_of(m);
    std::reverse(w.begin(), w.end());
    for (Letter &l : w) {
      if (l.is_l) throw std::invalid_argument("tau_transpose: L letters unsupported");
      std::swap(l.i, l.j);
    }
    NCPoly part = e.straighten(w, c.bar());
    for (const auto &[mm, cc] : part) nc_add(out, mm, cc);
  }
  return out;
}

namespace {

MinorSpec range_minor(int lo_r, int hi_r, int lo_c, int hi_c) {
  MinorSpec m;
  for (int r = lo_r; r <= hi_r; ++r) m.rows.push_back(r);
  for (int c = lo_c; c <= hi_c; ++c) m.cols.push_back(c);
  return m;
}

} // namespace

std::vector<CenterGenerator> center_generators(const Engine &e, unsigned m, bool psi_as_phistar) {
  const int n = e.n();
  const Family f = e.spec().family;
  if (m < 3) throw std::invalid_argument("center_generators: m >= 3 required");
  std::vector<CenterGenerator> out;
  auto nm = [&](const std::string &s) { return s; };

  if (f == Family::j0) {
    const long mp = mprime((long)m);
    if (m % 2 == 1) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          out.push_back({nm("J_" + std::to_string(i) + std::to_string(j) + "^m"),
                         e.power(e.gen(i, j), (long)m)});
    } else {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          out.push_back({nm("J_" + std::to_string(i) + std::to_string(j) + "^m' J_" +
                            std::to_string(j) + std::to_string(i) + "^m'"),
                         e.multiply(e.power(e.gen(i, j), mp), e.power(e.gen(j, i), mp))});
    }
    if ((long)m - n + 1 < 0)
      throw std::invalid_argument("center_generators: m - n + 1 < 0 unsupported");
    // J(k) = det({1..k},{n-k+1..n}) det({k..n},{1..n-k+1})
    NCPoly j1n_pow = e.power(e.gen(1, n), (long)m - n + 1);
    for (int k = 2; k <= n; ++k) {
      NCPoly jk = e.multiply(qdet(e, range_minor(1, k, n - k + 1, n)),
                             qdet(e, range_minor(k, n, 1, n - k + 1)));
      out.push_back({nm("J(" + std::to_string(k) + ") J_1n^{m-n+1}"), e.multiply(jk, j1n_pow)});
    }
    out.push_back({nm("J_1n^{m-n+2} J(1)"),
                   e.multiply(e.power(e.gen(1, n), (long)m - n + 2), qdet_full(e))});
    for (long r = 1; r <= (long)m; ++r)
      out.push_back({nm("J_1n^{m-r} J_n1^{" + std::to_string(r) + "}"),
                     e.multiply(e.power(e.gen(1, n), (long)m - r), e.power(e.gen(n, 1), r))});
    return out;
  }

  if (f == Family::jz) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        out.push_back({nm("M_" + std::to_string(i) + std::to_string(j) + "^m"),
                       e.power(e.gen(i, j), (long)m)});
    out.push_back({nm("M_1n"), e.gen(1, n)});
    out.push_back({nm("M_n1"), e.gen(n, 1)});
    NCPoly det = qdet_full(e);
    for (int k = 2; k <= n - 1; ++k) {
      NCPoly mk = qdet(e, range_minor(n - k + 1, n, 1, k));
      NCPoly mnk1 = qdet(e, range_minor(n - (n - k + 1) + 1, n, 1, n - k + 1));
      for (long r = 1; r <= (long)m - 1; ++r) {
        NCPoly x = e.multiply(e.power(mk, r), tau_transpose(e, e.power(mnk1, r)));
        x = e.multiply(x, e.power(det, (long)m - r));
        out.push_back({nm("M(" + std::to_string(k) + ")^" + std::to_string(r) +
                          " tau(M(" + std::to_string(n - k + 1) + ")^" + std::to_string(r) +
                          ") det^{m-" + std::to_string(r) + "}"),
                       std::move(x)});
      }
    }
    return out;
  }

  if (f == Family::jn) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        out.push_back({nm("N_" + std::to_string(i) + std::to_string(j) + "^m"),
                       e.power(e.gen(i, j), (long)m)});
    if (n % 2 == 1) {
      // Omega(n) = det^{a_1} prod_t phi_t^{a_{t+1}} prod_t phi*_t^{a_{n+1-t}}
      // with phi_t = det({t+1..n},{1..n-t}), phi*_t = det({1..t},{n-t+1..n}).
      // The commonly displayed exponent assignment (phi_i^{a_i}, psi from
      // j = 2 on) is not even centrally graded in the quasipolynomial
      // algebra; the shifted assignment above is the one whose leading term
      // is the central monomial N^{(n-2)A - I}, and it certifies central.
      // psi_as_phistar = false explores the transposed reading instead.
      auto a = [&](int t) -> long {
        if (t == 1) return n - 3;
        if (t % 2 == 1) return n - 2;
        return (long)(n - 2) * ((long)m - 1);
      };
      NCPoly omega = e.power(qdet_full(e), a(1));
      for (int t = 1; t <= n - 1; ++t) {
        NCPoly phi = qdet(e, range_minor(t + 1, n, 1, n - t));
        omega = e.multiply(omega, e.power(phi, a(t + 1)));
      }
      for (int t = 1; t <= n - 1; ++t) {
        NCPoly psi = psi_as_phistar ? qdet(e, range_minor(1, t, n - t + 1, n))
                                    : qdet(e, range_minor(t + 1, n, 1, n - t));
        omega = e.multiply(omega, e.power(psi, a(n + 1 - t)));
      }
      out.push_back({nm("Omega(n)"), std::move(omega)});
    }
    return out;
  }

  throw std::invalid_argument("center_generators: family must be j0, jz or jn");
}

std::vector<std::pair<std::string, bool>> center_certify(const Engine &e,
                                                         const std::vector<CenterGenerator> &gens,
                                                         unsigned m) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto &g : gens) out.emplace_back(g.name, e.central_check(g.poly, m));
  return out;
}

bool qprop_root(const Engine &e, unsigned m) {
  const int n = e.n();
  NCPoly lhs = e.power(qdet_full(e), (long)m);
  // classical determinant of the matrix of m-th powers
  NCPoly rhs;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    NCPoly prod = e.one();
    for (int r = 1; r <= n; ++r) prod = e.multiply(prod, e.power(e.gen(r, perm[r - 1]), (long)m));
    std::vector<int> p0(perm.begin(), perm.end());
    long l = inversions(p0);
    rhs = nc_sum(rhs, nc_scale(prod, Laurent(l % 2 == 0 ? 1 : -1)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return nc_specialize(lhs, m) == nc_specialize(rhs, m);
}

bool qprop_generic_fails(const Engine &e, unsigned m) {
  const int n = e.n();
  NCPoly lhs = e.power(qdet_full(e), (long)m);
  NCPoly rhs;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    NCPoly prod = e.one();
    for (int r = 1; r <= n; ++r) prod = e.multiply(prod, e.power(e.gen(r, perm[r - 1]), (long)m));
    std::vector<int> p0(perm.begin(), perm.end());
    long l = inversions(p0);
    rhs = nc_sum(rhs, nc_scale(prod, Laurent(l % 2 == 0 ? 1 : -1)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return !(lhs == rhs);
}

} // namespace qma
