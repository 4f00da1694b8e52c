#include "qma/rootdata.hpp"

#include <stdexcept>

namespace qma {

std::string family_name(Family f) {
  switch (f) {
    case Family::standard: return "standard";
    case Family::dipper: return "dipper";
    case Family::j0: return "j0";
    case Family::jz: return "jz";
    case Family::jn: return "jn";
    case Family::custom: return "custom";
  }
  return "?";
}

Family family_from_name(const std::string &s) {
  if (s == "standard") return Family::standard;
  if (s == "dipper") return Family::dipper;
  if (s == "j0") return Family::j0;
  if (s == "jz") return Family::jz;
  if (s == "jn") return Family::jn;
  if (s == "custom") return Family::custom;
  throw std::invalid_argument("unknown family: " + s);
}

Weight Weight::lambda_mu(int n, int k) {
  if (k < 1 || k > n) throw std::out_of_range("lambda_mu index");
  Weight w(n);
  if (k <= n - 1) w.c[k] = 1;
  return w;
}

Weight Weight::lambda_nu(int n, int k) {
  if (k < 1 || k > n) throw std::out_of_range("lambda_nu index");
  Weight w(n);
  if (k <= n - 1) w.c[n - 1 + k] = 1;
  return w;
}

Weight Weight::operator+(const Weight &o) const {
  if (c.size() != o.c.size()) throw std::invalid_argument("Weight: dimension mismatch");
  Weight r = *this;
  for (size_t t = 0; t < c.size(); ++t) r.c[t] += o.c[t];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (long &x : r.c) x = -x;
  return r;
}

Weight Weight::scaled(long t) const {
  Weight r = *this;
  for (long &x : r.c) x *= t;
  return r;
}

RootSupport RootSupport::alpha(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("alpha indices");
  RootSupport s;
  s.n = n;
  s.indices.push_back(0); // beta
  for (int k = 1; k < i; ++k) s.indices.push_back(k);
  for (int k = 1; k < j; ++k) s.indices.push_back(n - 1 + k);
  return s;
}

long pairing(const RootSupport &alpha, const Weight &w) {
  if (w.c.size() != size_t(2 * alpha.n - 1))
    throw std::invalid_argument("pairing: dimension mismatch");
  long acc = 0;
  for (int idx : alpha.indices) acc += w.c[idx];
  return acc;
}

long pairing_alpha(int n, int i, int j, const Weight &w) {
  if (w.c.size() != size_t(2 * n - 1))
    throw std::invalid_argument("pairing_alpha: dimension mismatch");
  long acc = w.c[0];
  for (int k = 1; k < i; ++k) acc += w.c[k];
  for (int k = 1; k < j; ++k) acc += w.c[n - 1 + k];
  return acc;
}

void family_to_wp(Family f, int n, std::vector<Weight> &zetas, std::vector<Weight> &xis) {
  zetas.assign(n, Weight(n));
  xis.assign(n, Weight(n));
  switch (f) {
    case Family::standard:
      break;
    case Family::dipper:
      for (int i = 1; i <= n; ++i) zetas[i - 1] = -Weight::lambda_mu(n, i);
      for (int j = 1; j <= n; ++j) xis[j - 1] = Weight::lambda_nu(n, j);
      break;
    case Family::j0:
      for (int i = 1; i <= n; ++i)
        zetas[i - 1] = Weight::lambda_beta(n).scaled(-i) + (-Weight::lambda_mu(n, i));
      for (int j = 1; j <= n; ++j)
        xis[j - 1] = Weight::lambda_beta(n).scaled(-j) + (-Weight::lambda_nu(n, j));
      break;
    case Family::jz:
      for (int i = 1; i <= n; ++i) zetas[i - 1] = -Weight::lambda_mu(n, i);
      for (int j = 1; j <= n; ++j) xis[j - 1] = -Weight::lambda_nu(n, j);
      break;
    case Family::jn:
      for (int i = 1; i <= n; ++i)
        zetas[i - 1] = Weight::lambda_beta(n).scaled(-i) + (-Weight::lambda_mu(n, i));
      for (int j = 1; j <= n; ++j)
        xis[j - 1] = Weight::lambda_beta(n).scaled(j) + Weight::lambda_nu(n, j);
      break;
    case Family::custom:
      throw std::invalid_argument("family_to_wp: custom has no canonical modification vector");
  }
}

AlgebraSpec AlgebraSpec::make(Family f, int n) {
  if (n < 2) throw std::invalid_argument("AlgebraSpec: n must be >= 2");
  AlgebraSpec s;
  s.n = n;
  s.family = f;
  family_to_wp(f, n, s.zetas, s.xis);
  return s;
}

AlgebraSpec AlgebraSpec::custom(int n, std::vector<Weight> zetas, std::vector<Weight> xis) {
  if (n < 2) throw std::invalid_argument("AlgebraSpec: n must be >= 2");
  if (zetas.size() != size_t(n) || xis.size() != size_t(n))
    throw std::invalid_argument("AlgebraSpec: modification vector must have n zetas and n xis");
  for (const Weight &w : zetas)
    if (w.c.size() != size_t(2 * n - 1)) throw std::invalid_argument("AlgebraSpec: bad weight length");
  for (const Weight &w : xis)
    if (w.c.size() != size_t(2 * n - 1)) throw std::invalid_argument("AlgebraSpec: bad weight length");
  AlgebraSpec s;
  s.n = n;
  s.family = Family::custom;
  s.zetas = std::move(zetas);
  s.xis = std::move(xis);
  return s;
}

long exchange_exponent(const AlgebraSpec &spec, GenPos a, GenPos b) {
  if (a == b) throw std::invalid_argument("exchange_exponent: equal index pairs");
  if (b < a) return -exchange_exponent(spec, b, a);
  const int n = spec.n;
  const Weight &zi = spec.zetas[a.i - 1];
  const Weight &xj = spec.xis[a.j - 1];
  const Weight &zs = spec.zetas[b.i - 1];
  const Weight &xt = spec.xis[b.j - 1];
  long h = pairing_alpha(n, b.i, b.j, zi) + pairing_alpha(n, b.i, b.j, xj) -
           pairing_alpha(n, a.i, a.j, zs) - pairing_alpha(n, a.i, a.j, xt);
  if (a.i == b.i || a.j == b.j) h += 1; // same row or same column
  return h;
}

long extra_exponent(const AlgebraSpec &spec, GenPos a, GenPos b) {
  if (!(a.i < b.i && a.j < b.j))
    throw std::invalid_argument("extra_exponent: requires i < s and j < t");
  const int n = spec.n;
  const Weight &zi = spec.zetas[a.i - 1];
  const Weight &xj = spec.xis[a.j - 1];
  const Weight &xt = spec.xis[b.j - 1];
  // (a_{s,t} | z_i + x_j) - (a_{s,j} | z_i + x_t)
  return pairing_alpha(n, b.i, b.j, zi) + pairing_alpha(n, b.i, b.j, xj) -
         pairing_alpha(n, b.i, a.j, zi) - pairing_alpha(n, b.i, a.j, xt);
}

} // namespace qma
