#include "qma/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace qma {

Engine::Engine(AlgebraSpec spec, bool with_L, bool tensor)
    : spec_(std::move(spec)), with_L_(with_L), tensor_(tensor) {
  const int n = spec_.n;
  rules_.resize(size_t(n) * n * n * n);
  for (int xi = 1; xi <= n; ++xi)
    for (int xj = 1; xj <= n; ++xj)
      for (int yi = 1; yi <= n; ++yi)
        for (int yj = 1; yj <= n; ++yj) {
          GenPos x{xi, xj}, y{yi, yj};
          if (!(y < x)) continue;
          SwapRule r;
          r.h = exchange_exponent(spec_, y, x);
          if (y.i < x.i && y.j < x.j) {
            r.corr = true;
            r.hx = extra_exponent(spec_, y, x);
            r.c1i = y.i; r.c1j = x.j; r.c2i = x.i; r.c2j = y.j;
          }
          rules_[size_t(zidx(xi, xj)) * n * n + zidx(yi, yj)] = r;
        }
  // (lambda_k | alpha_{i,j}) table, k running over [beta, mu_*, nu_*]
  lz_.assign(2 * n - 1, std::vector<long>(size_t(n) * n, 0));
  for (int k = 0; k < 2 * n - 1; ++k) {
    Weight lam(n);
    lam.c[k] = 1;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) lz_[k][zidx(i, j)] = pairing_alpha(n, i, j, lam);
  }
}

const Engine::SwapRule &Engine::rule(int xi, int xj, int yi, int yj) const {
  const int n = spec_.n;
  return rules_[size_t(zidx(xi, xj)) * n * n + zidx(yi, yj)];
}

Monomial Engine::scalar_monomial() const {
  Monomial m;
  const int n = spec_.n;
  if (with_L_) m.l1.assign(2 * n - 1, 0);
  m.z1.assign(size_t(n) * n, 0);
  if (tensor_) {
    if (with_L_) m.l2.assign(2 * n - 1, 0);
    m.z2.assign(size_t(n) * n, 0);
  }
  return m;
}

NCPoly Engine::one() const {
  NCPoly p;
  p.emplace(scalar_monomial(), Laurent(1));
  return p;
}

NCPoly Engine::gen(int i, int j, int slot) const {
  Monomial m = scalar_monomial();
  (slot == 0 ? m.z1 : m.z2)[zidx(i, j)] = 1;
  NCPoly p;
  p.emplace(std::move(m), Laurent(1));
  return p;
}

NCPoly Engine::lgen(int k, long e, int slot) const {
  if (!with_L_) throw std::logic_error("Engine: L generators not enabled");
  Monomial m = scalar_monomial();
  (slot == 0 ? m.l1 : m.l2)[k] = e;
  NCPoly p;
  p.emplace(std::move(m), Laurent(1));
  return p;
}

int Engine::letter_rank(const Letter &l) const {
  // slot major, L before Z, L by k, Z by lex (i,j)
  const int n = spec_.n;
  int base = l.slot * (2 * n - 1 + n * n + 1);
  if (l.is_l) return base + l.k;
  return base + 2 * n - 1 + 1 + zidx(l.i, l.j);
}

Word Engine::letters_of(const Monomial &m) const {
  Word w;
  const int n = spec_.n;
  auto emit_slot = [&](const std::vector<long> &l, const std::vector<int> &z, int slot) {
    for (int k = 0; k < (int)l.size(); ++k)
      if (l[k] != 0) w.push_back(Letter::L(k, l[k], slot));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int rep = 0; rep < z[zidx(i, j)]; ++rep) w.push_back(Letter::Z(i, j, slot));
  };
  emit_slot(m.l1, m.z1, 0);
  if (tensor_) emit_slot(m.l2, m.z2, 1);
  return w;
}

NCPoly Engine::straighten(const Word &w0, Laurent coeff) const {
  for (const Letter &l : w0) {
    if (l.slot < 0 || l.slot > (tensor_ ? 1 : 0)) throw std::invalid_argument("bad slot");
    if (l.is_l) {
      if (!with_L_ || l.k < 0 || l.k >= 2 * spec_.n - 1) throw std::invalid_argument("bad L letter");
    } else if (l.i < 1 || l.i > spec_.n || l.j < 1 || l.j > spec_.n) {
      throw std::invalid_argument("bad Z letter");
    }
  }

  NCPoly result;
  std::vector<std::pair<Laurent, Word>> stack;
  stack.emplace_back(std::move(coeff), w0);

  while (!stack.empty()) {
    auto [c, w] = std::move(stack.back());
    stack.pop_back();

    size_t p = 0;
    while (p + 1 < w.size()) {
      const Letter &a = w[p];
      const Letter &b = w[p + 1];
      int ra = letter_rank(a), rb = letter_rank(b);
      if (ra <= rb) { ++p; continue; }

      if (a.slot != b.slot || a.is_l != b.is_l || (a.is_l && b.is_l)) {
        // cross-slot, L-L, or Z-L: exchange with at most a q-power
        long shift = 0;
        if (a.slot == b.slot && !a.is_l && b.is_l)
          shift = -b.e * lz_[b.k][zidx(a.i, a.j)]; // Z L^e = q^{-e(l|a)} L^e Z
        std::swap(w[p], w[p + 1]);
        if (shift != 0) c *= Laurent::q_power(shift);
        if (p > 0) --p;
        continue;
      }

      // two Z letters in one slot, out of lex order
      const SwapRule &r = rule(a.i, a.j, b.i, b.j);
      if (r.corr) {
        Word w2(w.begin(), w.begin() + p);
        w2.push_back(Letter::Z(r.c1i, r.c1j, a.slot));
        w2.push_back(Letter::Z(r.c2i, r.c2j, a.slot));
        w2.insert(w2.end(), w.begin() + p + 2, w.end());
        Laurent c2 = c * Laurent::q_power(-r.h + r.hx) * Laurent::q_minus_qinv();
        stack.emplace_back(-c2, std::move(w2));
      }
      std::swap(w[p], w[p + 1]);
      c *= Laurent::q_power(-r.h);
      if (p > 0) --p;
    }

    // convert the now-ordered word into a monomial
    Monomial m = scalar_monomial();
    for (const Letter &l : w) {
      if (l.is_l)
        (l.slot == 0 ? m.l1 : m.l2)[l.k] += l.e;
      else
        (l.slot == 0 ? m.z1 : m.z2)[zidx(l.i, l.j)] += 1;
    }
    nc_add(result, m, c);
  }
  return result;
}

NCPoly Engine::multiply(const NCPoly &p, const NCPoly &q) const {
  NCPoly r;
  for (const auto &[mp, cp] : p) {
    Word wp = letters_of(mp);
    for (const auto &[mq, cq] : q) {
      Word w = wp;
      Word wq = letters_of(mq);
      w.insert(w.end(), wq.begin(), wq.end());
      NCPoly part = straighten(w, cp * cq);
      for (const auto &[m, c] : part) nc_add(r, m, c);
    }
  }
  return r;
}

NCPoly Engine::commutator(const NCPoly &p, const NCPoly &q) const {
  return nc_diff(multiply(p, q), multiply(q, p));
}

NCPoly Engine::power(const NCPoly &p, long k) const {
  if (k < 0) {
    if (p.size() != 1) throw std::invalid_argument("Engine::power: negative power of a sum");
    const auto &[m, c] = *p.begin();
    for (int e : m.z1) if (e) throw std::invalid_argument("Engine::power: negative power of a Z monomial");
    for (int e : m.z2) if (e) throw std::invalid_argument("Engine::power: negative power of a Z monomial");
    auto mono = c.as_monomial();
    if (!mono) throw std::invalid_argument("Engine::power: coefficient not invertible");
    Monomial inv = m;
    for (long &e : inv.l1) e *= k;
    for (long &e : inv.l2) e *= k;
    NCPoly r;
    Rat base = mono->second, acc = 1;
    for (long t = 0; t < -k; ++t) acc /= base;
    r.emplace(std::move(inv), Laurent::q_power(mono->first * k, acc));
    return r;
  }
  NCPoly r = one();
  for (long t = 0; t < k; ++t) r = multiply(r, p);
  return r;
}

std::optional<std::map<std::pair<int, int>, long>> Engine::covariance_check(const NCPoly &p) const {
  if (p.empty()) throw std::invalid_argument("covariance_check: zero input");
  std::map<std::pair<int, int>, long> out;
  const int n = spec_.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly g = gen(i, j);
      NCPoly lhs = multiply(p, g);
      NCPoly rhs = multiply(g, p);
      // lhs == q^c rhs termwise
      if (lhs.size() != rhs.size()) return std::nullopt;
      std::optional<long> c;
      auto it = lhs.begin();
      auto jt = rhs.begin();
      for (; it != lhs.end(); ++it, ++jt) {
        if (it->first != jt->first) return std::nullopt;
        auto ratio = jt->second.monomial_ratio(it->second);
        if (!ratio || ratio->second != 1) return std::nullopt;
        if (!c) c = ratio->first;
        else if (*c != ratio->first) return std::nullopt;
      }
      out[{i, j}] = c.value_or(0);
    }
  return out;
}

bool Engine::central_check(const NCPoly &p, std::optional<unsigned> m) const {
  const int n = spec_.n;
  auto vanishes = [&](const NCPoly &c) {
    if (!m) return c.empty();
    for (const auto &[mono, coeff] : c)
      if (!specialize(coeff, *m).is_zero()) return false;
    return true;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!vanishes(commutator(p, gen(i, j)))) return false;
  if (with_L_)
    for (int k = 0; k < 2 * n - 1; ++k)
      if (!vanishes(commutator(p, lgen(k)))) return false;
  return true;
}

long Engine::monomial_exchange_exponent(const std::vector<int> &B, GenPos st) const {
  const int n = spec_.n;
  if (B.size() != size_t(n) * n) throw std::invalid_argument("monomial_exchange_exponent: bad B");
  long acc = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int e = B[zidx(i, j)];
      if (e == 0 || (st.i == i && st.j == j)) continue;
      acc += (long)e * exchange_exponent(spec_, st, GenPos{i, j});
    }
  return acc;
}

} // namespace qma
