#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace affine {

// Floor division / modulo for possibly-negative numerators, positive divisor.
inline long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

inline long long floor_mod(long long a, long long b) { return a - b * floor_div(a, b); }

// Ceiling of a/b for b > 0.
inline long long ceil_div(long long a, long long b) { return floor_div(a - 1, b) + 1; }

// Representative of i modulo n lying in {1, ..., n}.
inline long long residue_1n(long long i, long long n) { return i - n * floor_div(i - 1, n); }

}  // namespace affine
