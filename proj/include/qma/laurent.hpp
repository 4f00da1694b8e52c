#pragma once

// Laurent polynomials in the quantum parameter q over the rationals.
// Sparse exponent -> coefficient map; zero coefficients are never stored.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qma/rational.hpp"

namespace qma {

class Laurent {
public:
  Laurent() = default;
  Laurent(long c) { if (c != 0) terms_[0] = c; }
  Laurent(const Rat &c) { if (c != 0) terms_[0] = c; }

  // q^e with coefficient c
  static Laurent q_power(long e, Rat c = 1) {
    Laurent p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
  }

  static Laurent q() { return q_power(1); }

  // q - q^{-1}, the ubiquitous correction coefficient
  static Laurent q_minus_qinv() {
    Laurent p;
    p.terms_[1] = 1;
    p.terms_[-1] = -1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  bool operator==(const Laurent &o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent &o) const { return terms_ != o.terms_; }

  Laurent &operator+=(const Laurent &o) {
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent &operator-=(const Laurent &o) {
    for (const auto &[e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent operator+(const Laurent &o) const { Laurent r = *this; r += o; return r; }
  Laurent operator-(const Laurent &o) const { Laurent r = *this; r -= o; return r; }
  Laurent operator-() const {
    Laurent r;
    for (const auto &[e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Laurent operator*(const Laurent &o) const {
    Laurent r;
    for (const auto &[e1, c1] : terms_)
      for (const auto &[e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  Laurent &operator*=(const Laurent &o) { *this = *this * o; return *this; }

  Laurent scaled(const Rat &c) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto &[e, co] : terms_) r.terms_[e] = co * c;
    return r;
  }

  Laurent shifted(long e) const {
    Laurent r;
    for (const auto &[ex, c] : terms_) r.terms_[ex + e] = c;
    return r;
  }

  // the bar involution q -> q^{-1}
  Laurent bar() const {
    Laurent r;
    for (const auto &[e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  // d/dq, formally; negative exponents allowed
  Laurent derivative() const {
    Laurent r;
    for (const auto &[e, c] : terms_)
      if (e != 0) r.terms_[e - 1] = c * e;
    return r;
  }

  // Evaluation at a nonzero rational value of q.
  Rat evaluate(const Rat &v) const {
    if (v == 0) throw std::invalid_argument("Laurent::evaluate at q=0");
    Rat acc = 0;
    for (const auto &[e, c] : terms_) {
      Rat p = 1;
      Rat base = e >= 0 ? v : Rat(denominator(v), numerator(v));
      for (long k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
      acc += c * p;
    }
    return acc;
  }

  // If this = c * q^e for a single term, return (e, c).
  std::optional<std::pair<long, Rat>> as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return std::make_pair(terms_.begin()->first, terms_.begin()->second);
  }

  // (e, c) with other = q^e * c * this, when such a monomial ratio exists.
  std::optional<std::pair<long, Rat>> monomial_ratio(const Laurent &other) const {
    if (is_zero() || other.terms_.size() != terms_.size()) return std::nullopt;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    long e = jt->first - it->first;
    Rat c = jt->second / it->second;
    for (; it != terms_.end(); ++it, ++jt) {
      if (jt->first - it->first != e) return std::nullopt;
      if (jt->second != c * it->second) return std::nullopt;
    }
    return std::make_pair(e, c);
  }

  const std::map<long, Rat> &terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      Rat a = c > 0 ? c : Rat(-c);
      if (a != 1 || e == 0) os << a.str();
      if (e != 0) {
        if (a != 1) os << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

private:
  void add_term(long e, const Rat &c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<long, Rat> terms_;
};

inline Laurent operator*(const Rat &c, const Laurent &p) { return p.scaled(c); }

} // namespace qma
