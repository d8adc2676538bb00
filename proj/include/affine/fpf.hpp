#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affine/partition.hpp"
#include "affine/perm.hpp"
#include "affine/symfunc.hpp"

namespace affine {

// A fixed-point-free involution in the affine symmetric group (n even),
// with its sign class and height cached at validation time.
class FpfInvolution {
 public:
  FpfInvolution() = default;
  // Validates: n even, self-inverse, no fixed points, integral beta.
  static FpfInvolution from_perm(const AffinePerm& p);
  static FpfInvolution from_window(int n, const std::vector<long long>& w);

  const AffinePerm& perm() const { return p_; }
  int period() const { return p_.period(); }
  long long operator()(long long i) const { return p_(i); }
  long long beta() const { return beta_; }
  int sign() const { return beta_ % 2 == 0 ? +1 : -1; }
  long long height() const { return height_; }
  std::string str() const { return p_.str(); }

  auto operator<=>(const FpfInvolution&) const = default;

 private:
  AffinePerm p_;
  long long beta_ = 0;
  long long height_ = 0;
};

// The minimal elements of the two conjugation classes:
// theta(n, +1) = s_1 s_3 ... s_{n-1}, theta(n, -1) = s_2 s_4 ... s_n.
FpfInvolution theta(int n, int sign);

FpfInvolution conj_simple(const FpfInvolution& z, long long i);  // s_i z s_i
// Height change of s_i z s_i, from the window: -1, 0, or +1.
int conj_height_delta(const FpfInvolution& z, long long i);
// (t z t, height change) for t = t_{ij}, with the height change computed by
// the inversion-interval case formulas and cross-checked by recomputation.
std::pair<FpfInvolution, long long> conj_by_reflection(const FpfInvolution& z, long long i,
                                                       long long j);

AffinePerm alpha_min(const FpfInvolution& z);
AffinePerm alpha_max(const FpfInvolution& z);

// All minimal-length w with w^{-1} Theta w = z, via the descent recursion.
std::vector<AffinePerm> atoms(const FpfInvolution& z);

// Covers of the atom order: exchanging adjacent nested cycle pairs
// (a,d),(b,c) -> (b,c),(a,d) with a<b<c<d, in every cyclic alignment of the
// pair sequence.
struct AtomPoset {
  std::vector<AffinePerm> elements;            // sorted
  std::vector<std::pair<int, int>> covers;     // (lower, upper) indices
};
AtomPoset atom_poset(const FpfInvolution& z);
// Closure of the cover move starting from alpha_min; with all_alignments
// false only the base pair alignment is used (cross-check variant).
std::vector<AffinePerm> atoms_by_closure(const FpfInvolution& z, bool all_alignments = true);

// c_i = #{ j in Z : i < j, z(i) > z(j), i > z(j) }, for i in [n].
std::vector<int> fpf_code(const FpfInvolution& z);
// { i in [n] : min(i, z(i)) > z(i+1) }.
std::set<int> visible_descents(const FpfInvolution& z);
// Transpose of the decreasing sort of fpf_code(z).
Partition nu(const FpfInvolution& z);

// Sum of the Stanley expansions over the atoms of z.
MonomialExpansion fpf_stanley(const FpfInvolution& z);

// No i < j < k with z(i) > z(j) > z(k); equivalent to having a single atom.
bool is_321_avoiding(const FpfInvolution& z);

}  // namespace affine
