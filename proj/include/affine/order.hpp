#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "affine/fpf.hpp"

namespace affine {

struct CoverEdge {
  long long i, j;  // reflection t_{ij}, normalized i in [n]
  int target;      // index of the element one height step away
  auto operator<=>(const CoverEdge&) const = default;
};

// All fixed-point-free involutions of one sign class with height <= lmax,
// together with the Bruhat cover relation.
struct Universe {
  int n = 0;
  int sign = +1;
  long long lmax = 0;
  std::vector<FpfInvolution> elements;        // sorted by (height, window)
  std::vector<std::vector<CoverEdge>> down;   // per element: covers one step down
  std::vector<std::vector<CoverEdge>> up;     // transpose of down
  long long spread_bound = 0;                 // max window spread over elements

  int index_of(const FpfInvolution& z) const;  // -1 if absent
};

// Breadth-first closure of theta(n, sign) under simple conjugations with
// height <= lmax; throws if more than max_elements are generated.
Universe build_universe(int n, int sign, long long lmax, long long max_elements = 200000);

// Downward Bruhat covers of z: all ((i,j), t z t) with height one less,
// scanned over i in [n], i < j <= i + width (default n*(1+spread)).
std::vector<std::pair<std::pair<long long, long long>, FpfInvolution>> covers_down(
    const FpfInvolution& z, long long width = -1);

struct QpReport {
  bool pass = true;
  long long checks = 0;
  std::string witness;  // description of the first failure
};

using HeightFn = std::function<long long(const FpfInvolution&)>;

// Exhaustive check of the first quasiparabolic axiom on U: a reflection that
// preserves the height of an element must fix it.
QpReport verify_qp1(const Universe& u, const HeightFn& height = nullptr);
// Second axiom: ht(rx) > ht(x) and ht(srx) < ht(sx) force rx = sx.
QpReport verify_qp2(const Universe& u, const HeightFn& height = nullptr);
// Rebuilds every cover list with the scan bound widened by n and reports
// whether any new cover appears.
QpReport scan_completeness_check(const Universe& u);

// Reachability in the cover relation; throws if y or z is not in U.
bool bruhat_leq_F(const Universe& u, const FpfInvolution& y, const FpfInvolution& z);

// For every cover y <. z and every atom w of z there is an atom v of y
// covered by w in the ordinary Bruhat order, and for same-sign non-cover
// pairs at adjacent heights there is none.
QpReport atom_cover_check(const Universe& u);

}  // namespace affine
