#include "qma/json_io.hpp"

namespace qma {

namespace {

json int_to_json(const Int &v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return (long long)v.convert_to<long long>();
  return v.str();
}

json rat_to_json(const Rat &v) {
  return json::array({int_to_json(numerator(v)), int_to_json(denominator(v))});
}

} // namespace

json spec_to_json(const AlgebraSpec &spec) {
  json j;
  j["n"] = spec.n;
  j["family"] = family_name(spec.family);
  json zetas = json::array(), xis = json::array();
  for (const Weight &w : spec.zetas) zetas.push_back(w.c);
  for (const Weight &w : spec.xis) xis.push_back(w.c);
  j["zetas"] = zetas;
  j["xis"] = xis;
  return j;
}

AlgebraSpec spec_from_json(const json &j) {
  int n = j.at("n").get<int>();
  Family f = family_from_name(j.at("family").get<std::string>());
  if (f != Family::custom && !j.contains("zetas")) return AlgebraSpec::make(f, n);
  std::vector<Weight> zetas, xis;
  for (const auto &row : j.at("zetas")) {
    Weight w;
    w.c = row.get<std::vector<long>>();
    zetas.push_back(std::move(w));
  }
  for (const auto &row : j.at("xis")) {
    Weight w;
    w.c = row.get<std::vector<long>>();
    xis.push_back(std::move(w));
  }
  if (f == Family::custom) return AlgebraSpec::custom(n, std::move(zetas), std::move(xis));
  AlgebraSpec s = AlgebraSpec::make(f, n);
  if (!(s.zetas == zetas) || !(s.xis == xis))
    throw std::invalid_argument("spec_from_json: named family disagrees with its wp data");
  return s;
}

json ncpoly_to_json(const Engine &e, const NCPoly &p) {
  const int n = e.n();
  json out = json::array();
  for (const auto &[m, c] : p) {
    json term;
    term["lexp"] = m.l1;
    json z = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(m.z1[i * n + j]);
      z.push_back(row);
    }
    term["zexp"] = z;
    if (e.tensor()) {
      term["lexp2"] = m.l2;
      json z2 = json::array();
      for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(m.z2[i * n + j]);
        z2.push_back(row);
      }
      term["zexp2"] = z2;
    }
    json coeff = json::array();
    for (const auto &[exp, co] : c.terms())
      coeff.push_back(json::array({exp, int_to_json(numerator(co)), int_to_json(denominator(co))}));
    term["coeff"] = coeff;
    out.push_back(std::move(term));
  }
  return out;
}

json matrix_to_json(const SkewIntMatrix &m) {
  json rows = json::array();
  for (int i = 0; i < m.N; ++i) {
    json row = json::array();
    for (int j = 0; j < m.N; ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json canonical_to_json(const CanonicalForm &cf) {
  json j;
  json blocks = json::array();
  for (const Int &b : cf.blocks) blocks.push_back(int_to_json(b));
  j["blocks"] = blocks;
  j["zeros"] = cf.zeros;
  json w = json::array();
  for (int i = 0; i < cf.N; ++i) {
    json row = json::array();
    for (int k = 0; k < cf.N; ++k) row.push_back(int_to_json(cf.w(i, k)));
    w.push_back(std::move(row));
  }
  j["W"] = w;
  return j;
}

json module_to_json(const ModuleRep &rep) {
  json j;
  j["dimension"] = rep.dim;
  j["m"] = rep.m;
  j["spec"] = spec_to_json(rep.spec);
  const int n = rep.spec.n;
  json mats;
  for (int i = 1; i <= n; ++i)
    for (int jj = 1; jj <= n; ++jj) {
      json mat = json::array();
      const auto &M = rep.mats[(i - 1) * n + (jj - 1)];
      for (long r = 0; r < rep.dim; ++r) {
        json row = json::array();
        for (long c = 0; c < rep.dim; ++c) {
          const Cyc &v = M[size_t(r) * rep.dim + c];
          json coeffs = json::array();
          for (const Rat &x : v.coeffs()) coeffs.push_back(rat_to_json(x));
          row.push_back(std::move(coeffs));
        }
        mat.push_back(std::move(row));
      }
      mats["Z" + std::to_string(i) + std::to_string(jj)] = std::move(mat);
    }
  j["matrices"] = std::move(mats);
  return j;
}

json claims_to_json(const std::vector<ClaimResult> &claims) {
  json out = json::array();
  for (const ClaimResult &c : claims) {
    json j;
    j["claim"] = c.claim;
    j["tag"] = c.tag;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

} // namespace qma
