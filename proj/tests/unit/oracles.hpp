#pragma once

// Independent brute-force oracles used only by tests. These deliberately
// avoid the library's counting shortcuts: lengths come from scanning pairs,
// atom sets from enumerating the group by length.

#include <algorithm>
#include <set>
#include <vector>

#include "affine/fpf.hpp"
#include "affine/perm.hpp"

namespace oracles {

// Number of inversion classes, counting representatives (i, j) with i in
// [n] by direct scan. The scan range is generous: any inversion value gap
// is bounded by the window spread.
inline long long length_by_scan(const affine::AffinePerm& a) {
  int n = a.period();
  long long reach = 2 * affine::spread(a) + 2 * n;
  long long cnt = 0;
  for (long long i = 1; i <= n; ++i)
    for (long long j = i + 1; j <= i + reach; ++j)
      if (a(i) > a(j)) ++cnt;
  return cnt;
}

// Minimal-length conjugators from the base point of the sign class of z,
// found by enumerating all elements of the right length.
inline std::vector<affine::AffinePerm> atoms_by_enumeration(const affine::FpfInvolution& z) {
  using namespace affine;
  AffinePerm th = theta(z.period(), z.sign()).perm();
  std::vector<AffinePerm> out;
  auto levels = elements_by_length(z.period(), (int)z.height());
  for (const AffinePerm& w : levels[z.height()]) {
    if (w.inverse() * th * w == z.perm()) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracles
