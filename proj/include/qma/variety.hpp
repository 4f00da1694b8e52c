#pragma once

// Associated varieties Gamma(R) of the quadratic algebras: the defining
// relations read as bilinear forms f(p,q) = sum alpha_{g,g'} A_g B_{g'},
// membership tests for matrix pairs, and the named witness families.

#include <string>
#include <variant>
#include <vector>

#include "qma/laurent.hpp"
#include "qma/rootdata.hpp"

namespace qma {

// matrix over Laurent polynomials in q
struct QMatrix {
  int n = 0;
  std::vector<Laurent> a; // row-major
  Laurent &at(int i, int j) { return a[size_t(i - 1) * n + (j - 1)]; }
  const Laurent &at(int i, int j) const { return a[size_t(i - 1) * n + (j - 1)]; }
  static QMatrix zero(int n) { return {n, std::vector<Laurent>(size_t(n) * n)}; }
};

// one term alpha * x_{g1} (x) x_{g2}
struct BilinearTerm {
  Laurent coeff;
  GenPos g1, g2;
};
using BilinearForm = std::vector<BilinearTerm>;

// Defining relations of the family as bilinear forms.  For j0/jz/jn and the
// standard family these come from the wp-realization exponents (verified
// equal to the displayed presentations); for dipper they are the
// Dipper-Donkin presentation at parameter q, the object the variety
// classification concerns.
std::vector<BilinearForm> variety_relations(Family f, int n);

struct QValue {
  enum class Kind { symbolic, rational, root } kind = Kind::symbolic;
  Rat r;      // rational value, |r| != 1 as q^2 != 1 is assumed
  unsigned m = 0; // root of unity order, != 2

  static QValue symbolic() { return {}; }
  static QValue rational(Rat v);
  static QValue root(unsigned m);
};

// every relation evaluates to zero at the given q
bool variety_membership(Family f, int n, const QMatrix &A, const QMatrix &B, const QValue &q);

struct VarietyWitness {
  std::string name;
  QMatrix A, B;
};

// rank-one, two-block, proportional-row and proportional-column witnesses
// for the named families (with parameters fixed by the defining relations
// rather than the commonly displayed forms; see the tests)
std::vector<VarietyWitness> variety_witnesses(Family f, int n);

} // namespace qma
