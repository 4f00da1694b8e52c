#include "qma/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qma {

unsigned totient(unsigned m) {
  unsigned result = m, n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials, ascending coefficients.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int> &den) {
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (long i = (long)quot.size() - 1; i >= 0; --i) {
    Int c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Int &c : num)
    if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
  return quot;
}

} // namespace

namespace {

// map nodes are address-stable, so cached references stay valid; the mutex
// makes the cache safe for the parallel suite runner
const std::vector<Int> &phi_ref(unsigned m) {
  static std::map<unsigned, std::vector<Int>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by the product of Phi_d over proper divisors d | m.
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  std::vector<Int> den{1};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<Int> phi_d = phi_ref(d);
    std::vector<Int> prod(den.size() + phi_d.size() - 1, Int(0));
    for (size_t i = 0; i < den.size(); ++i)
      for (size_t j = 0; j < phi_d.size(); ++j) prod[i + j] += den[i] * phi_d[j];
    den = std::move(prod);
  }
  auto phi = poly_divide_exact(std::move(num), den);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(phi)).first->second;
}

} // namespace

std::vector<Int> cyclotomic_poly(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_poly: m must be positive");
  return phi_ref(m);
}

Cyc::Cyc(unsigned m, Rat rational_value) : m_(m), c_(totient(m), Rat(0)) {
  if (m == 0) throw std::invalid_argument("Cyc: m must be positive");
  c_[0] = std::move(rational_value);
}

Cyc Cyc::zeta(unsigned m, long power) {
  Cyc z(m, 0);
  long e = power % (long)m;
  if (e < 0) e += m;
  // reduce x^e mod Phi_m
  std::vector<Rat> rep(m, Rat(0));
  rep[e] = 1;
  const std::vector<Int> &phi = phi_ref(m);
  unsigned deg = totient(m);
  for (long i = (long)m - 1; i >= (long)deg; --i) {
    if (rep[i] == 0) continue;
    Rat c = rep[i];
    rep[i] = 0;
    for (unsigned j = 0; j < deg; ++j) rep[i - deg + j] -= c * Rat(phi[j]);
  }
  for (unsigned j = 0; j < deg; ++j) z.c_[j] = rep[j];
  return z;
}

void Cyc::check_same(const Cyc &o) const {
  if (m_ != o.m_) throw std::invalid_argument("Cyc: mixed cyclotomic orders");
}

bool Cyc::is_zero() const {
  for (const Rat &x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyc::operator==(const Cyc &o) const { return m_ == o.m_ && c_ == o.c_; }

Cyc Cyc::operator+(const Cyc &o) const {
  check_same(o);
  Cyc r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc &o) const {
  check_same(o);
  Cyc r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (Rat &x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator*(const Cyc &o) const {
  check_same(o);
  unsigned deg = (unsigned)c_.size();
  std::vector<Rat> prod(2 * deg - 1, Rat(0));
  for (unsigned i = 0; i < deg; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < deg; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  const std::vector<Int> &phi = phi_ref(m_);
  for (long i = (long)prod.size() - 1; i >= (long)deg; --i) {
    if (prod[i] == 0) continue;
    Rat c = prod[i];
    prod[i] = 0;
    for (unsigned j = 0; j < deg; ++j) prod[i - deg + j] -= c * Rat(phi[j]);
  }
  Cyc r(m_, 0);
  for (unsigned j = 0; j < deg; ++j) r.c_[j] = prod[j];
  return r;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc::inverse of zero");
  // Extended Euclid in Q[x] between this (as a polynomial) and Phi_m.
  unsigned deg = (unsigned)c_.size();
  const std::vector<Int> &phi0 = phi_ref(m_);
  std::vector<Rat> r0(phi0.size());
  for (size_t i = 0; i < phi0.size(); ++i) r0[i] = Rat(phi0[i]);
  std::vector<Rat> r1(c_.begin(), c_.end());
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0{0}, s1{1}; // coefficients of the input in the Bezout identity

  auto degree_of = [](const std::vector<Rat> &p) { return (long)p.size() - 1; };
  while (degree_of(r1) > 0) {
    // divide r0 by r1
    std::vector<Rat> quot(r0.size() - r1.size() + 1, Rat(0));
    std::vector<Rat> rem = r0;
    for (long i = (long)quot.size() - 1; i >= 0; --i) {
      Rat c = rem[i + r1.size() - 1] / r1.back();
      quot[i] = c;
      if (c != 0)
        for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) throw std::logic_error("Cyc::inverse: common factor with Phi_m");
    // s_new = s0 - quot * s1
    std::vector<Rat> snew(std::max(s0.size(), quot.size() + s1.size() - 1), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < quot.size(); ++i)
      if (quot[i] != 0)
        for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= quot[i] * s1[j];
    while (!snew.empty() && snew.back() == 0) snew.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
    if (s1.empty()) s1.push_back(Rat(0));
  }
  // r1 is a nonzero constant: inverse = s1 / r1
  Rat lead = r1[0];
  Cyc inv(m_, 0);
  for (size_t i = 0; i < s1.size() && i < deg; ++i) inv.c_[i] = s1[i] / lead;
  return inv;
}

Cyc Cyc::pow(long e) const {
  Cyc base = e >= 0 ? *this : inverse();
  unsigned long k = e >= 0 ? (unsigned long)e : (unsigned long)(-e);
  Cyc r(m_, 1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i >= 1) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Cyc specialize(const Laurent &p, unsigned m) {
  if (m == 0) throw std::invalid_argument("specialize: m must be positive");
  if (m == 2) throw std::invalid_argument("specialize: m = 2 is excluded");
  Cyc acc(m, 0);
  for (const auto &[e, c] : p.terms()) acc += Cyc::zeta(m, e) * Cyc(m, c);
  return acc;
}

Cyc divide_limit(const Laurent &p, unsigned m) {
  if (!specialize(p, m).is_zero())
    throw PoleError("divide_limit: p(zeta_m) != 0, limit does not exist");
  Cyc d = specialize(p.derivative(), m);
  Cyc z = Cyc::zeta(m, 1);
  return d * z * Cyc(m, Rat(1, (long)m * (long)m));
}

} // namespace qma
