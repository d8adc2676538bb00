#pragma once

#include <string>
#include <utility>
#include <vector>

#include "affine/fpf.hpp"
#include "affine/symfunc.hpp"

namespace affine {

// Covers of a of the form a t_{ir} with i < r (left set) and a t_{rj} with
// j > r (right set); the scan bound is validated by a widened rescan.
std::pair<std::vector<AffinePerm>, std::vector<AffinePerm>> phi_sets(const AffinePerm& a,
                                                                     long long r);

// Bruhat covers t y t of y with t = t_{ir}, i < r (left) or t = t_{rj},
// j > r (right), where the moved index avoids {r, y(r)} modulo n.
std::pair<std::vector<FpfInvolution>, std::vector<FpfInvolution>> pi_sets(const FpfInvolution& y,
                                                                          long long r);

struct TransitionReport {
  FpfInvolution y;
  long long p = 0, q = 0;
  std::vector<FpfInvolution> lower;  // downward-index cover set at p
  std::vector<FpfInvolution> upper;  // upward-index cover set at q
  MonomialExpansion lower_sum;
  MonomialExpansion upper_sum;
  bool equal = false;
};

// Exact comparison of the two cover-set sums for p < q = y(p).
TransitionReport check_transition_fpf(const FpfInvolution& y, long long p);

struct BijectionReport {
  bool pass = true;
  size_t pairs = 0;
  std::string witness;
};

// (w, t) -> w t is a bijection from atom/reflection pairs with w covered by
// w t and z = t y t onto the atoms of z; requires y covered by z.
BijectionReport atom_bijection_check(const FpfInvolution& y, const FpfInvolution& z);

// Pi^+(y,p) is contained in Pi^+(y,q) and Pi^-(y,q) in Pi^-(y,p).
BijectionReport pi_subset_check(const FpfInvolution& y, long long p);

// Atom/reflection triples whose conjugate leaves the cover range, paired by
// the toggle (w, i, j) -> (w t_{ij} t_{y(j)y(i)}, y(j), y(i)).
struct AtomTriple {
  AffinePerm w;
  long long i = 0, j = 0;
  auto operator<=>(const AtomTriple&) const = default;
};
std::vector<AtomTriple> n_minus_set(const FpfInvolution& y, long long p, long long q);
std::vector<AtomTriple> n_plus_set(const FpfInvolution& y, long long p, long long q);
AtomTriple toggle(const FpfInvolution& y, const AtomTriple& t);
// Checks that the toggle is an involution mapping the minus set onto the
// plus set.
BijectionReport toggle_check(const FpfInvolution& y, long long p);

}  // namespace affine
