#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace affine {

// An element of the affine symmetric group with period n: a bijection
// pi : Z -> Z with pi(i+n) = pi(i)+n and sum(pi(1..n)) = n(n+1)/2.
// Stored by its base window [pi(1), ..., pi(n)], the unique normal form.
class AffinePerm {
 public:
  AffinePerm() = default;

  static AffinePerm identity(int n);
  // Validates the window invariants and throws std::invalid_argument on
  // residue collisions or a wrong window sum.
  static AffinePerm from_window(int n, const std::vector<long long>& window);
  // Accepts any window [pi(k+1), ..., pi(k+n)]; the offset k is recovered
  // from the window sum.
  static AffinePerm from_any_window(int n, const std::vector<long long>& values);
  static AffinePerm simple(int n, long long i);
  // The reflection exchanging i+kn and j+kn; requires i < j, j != i mod n.
  static AffinePerm transposition(int n, long long i, long long j);

  int period() const { return n_; }
  const std::vector<long long>& window() const { return win_; }
  long long operator()(long long i) const;
  AffinePerm operator*(const AffinePerm& o) const;  // (a*b)(i) = a(b(i))
  AffinePerm inverse() const;
  bool is_identity() const;
  std::string str() const;

  auto operator<=>(const AffinePerm&) const = default;

 private:
  int n_ = 0;
  std::vector<long long> win_;
};

// c_i = #{ j in Z : i < j, pi(i) > pi(j) }, for i in [n].
std::vector<int> code(const AffinePerm& a);
long long length(const AffinePerm& a);
// { i in [n] : pi(i) > pi(i+1) }.
std::set<int> right_descents(const AffinePerm& a);
bool is_grassmannian(const AffinePerm& a);
// Inverse of code(); requires a nonnegative vector with at least one zero.
AffinePerm from_code(int n, const std::vector<int>& c);
// Transpose of the decreasing sort of code(a.inverse()).
std::vector<int> shape(const AffinePerm& a);

// Group automorphism with s_i -> s_{n-i}.
AffinePerm star(const AffinePerm& a);
// Group automorphism with s_i -> s_{i+1}.
AffinePerm rotate(const AffinePerm& a);

long long spread(const AffinePerm& a);  // max |pi(i) - i| over the window

// #{ k : i < k < j, k != i mod n, w(k) strictly between w(i) and w(j) }.
long long delta_count(const AffinePerm& w, long long i, long long j);
// Length of w * t_{ij} computed by the two-case delta formula.
long long length_after_right_mult(const AffinePerm& w, long long i, long long j);

// Inversion class representatives (i, j) with i in [n], i < j, pi(i) > pi(j).
std::vector<std::pair<long long, long long>> inversions(const AffinePerm& a);
// Reconstructs the unique element whose inversion set is the n-translation
// closure of the given representatives; throws with the violated closure
// condition and a witness otherwise.
AffinePerm from_inversion_set(int n, const std::vector<std::pair<long long, long long>>& gens);

// One-line form of the finite projection: i -> residue of pi(i) in [n].
std::vector<int> project_finite(const AffinePerm& a);

bool is_reflection(const AffinePerm& a);
// For a reflection, its normalized pair (i, j) with i in [n], i < j.
std::pair<long long, long long> reflection_pair(const AffinePerm& a);

// Ordinary Bruhat order, via the descent recursion.
bool bruhat_leq(const AffinePerm& v, const AffinePerm& w);
// v is covered by w: length difference one and w^{-1} v is a reflection.
bool bruhat_cover(const AffinePerm& v, const AffinePerm& w);

// All elements of length <= maxlen, grouped by length.
std::vector<std::vector<AffinePerm>> elements_by_length(int n, int maxlen);

}  // namespace affine
