#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace posetfano {

// All arithmetic in the library is exact.  Coordinates of lattice points
// stay in int64 (desk scale: |coords| small), intermediate determinant and
// elimination work uses arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Coord = long long;

inline Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Int binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace posetfano
