#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m) = Q[x]/(Phi_m(x)),
// plus the specialization q -> zeta_m of Laurent polynomials and the
// semiclassical limit divisor  lim_{q->zeta_m} p(q) / (m (q^m - 1)).

#include <stdexcept>
#include <vector>

#include "qma/laurent.hpp"
#include "qma/rational.hpp"

namespace qma {

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned totient(unsigned m);

// Phi_m, monic with integer coefficients, ascending degree order.
std::vector<Int> cyclotomic_poly(unsigned m);

// An element of Q(zeta_m), reduced modulo Phi_m.  m = 2 is rejected at the
// construction sites that matter (specialize / divide_limit); the class
// itself supports any m >= 1 so Phi-building code can stay uniform.
class Cyc {
public:
  Cyc() : m_(1), c_(1, Rat(0)) {}
  Cyc(unsigned m, Rat rational_value);
  static Cyc zeta(unsigned m, long power = 1);

  unsigned m() const { return m_; }
  unsigned degree() const { return (unsigned)c_.size(); }
  const std::vector<Rat> &coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Valid only when is_rational()
  Rat rational_value() const { return c_[0]; }

  bool operator==(const Cyc &o) const;
  bool operator!=(const Cyc &o) const { return !(*this == o); }

  Cyc operator+(const Cyc &o) const;
  Cyc operator-(const Cyc &o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc &o) const;
  Cyc &operator+=(const Cyc &o) { *this = *this + o; return *this; }
  Cyc &operator-=(const Cyc &o) { *this = *this - o; return *this; }
  Cyc &operator*=(const Cyc &o) { *this = *this * o; return *this; }

  Cyc inverse() const; // throws on zero
  Cyc pow(long e) const;

  std::string str() const;

private:
  friend Cyc specialize(const Laurent &, unsigned);
  void check_same(const Cyc &o) const;

  unsigned m_;
  std::vector<Rat> c_; // length phi(m), coefficients of 1, zeta, zeta^2, ...
};

// Ring homomorphism q |-> zeta_m.  m != 2 per the root-of-unity convention.
Cyc specialize(const Laurent &p, unsigned m);

// lim_{q -> zeta_m} p(q) / (m (q^m - 1)) = p'(zeta_m) * zeta_m / m^2.
// Requires specialize(p, m) == 0, otherwise the limit is a pole.
Cyc divide_limit(const Laurent &p, unsigned m);

} // namespace qma
