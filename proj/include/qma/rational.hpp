#pragma once

// Exact integer and rational arithmetic used throughout the workbench.
// All invariant checks are equality of exact values; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

namespace qma {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int &a) { return boost::multiprecision::abs(a); }

inline Int pow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

} // namespace qma
