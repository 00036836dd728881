#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dq {

// All counting and coefficient arithmetic is exact.  Int is unbounded;
// Rat is used internally where a pairing lives in (1/d)Z before it is
// proven integral.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor/ceiling division for arbitrary signs, b != 0.
inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long long ceil_div(long long a, long long b) {
  return -floor_div(-a, b);
}

// boost::rational over cpp_int rejects negative denominators outright
// (numeric_limits<cpp_int>::max() is 0, which trips its overflow guard),
// so fractions are built with the sign moved to the numerator.
inline Rat rat_frac(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

}  // namespace dq
