#pragma once

#include <map>
#include <set>
#include <string>

#include "affine/partition.hpp"
#include "affine/perm.hpp"

namespace affine {

// Homogeneous element of Sym^(n) in the monomial basis: an exact
// integer-coefficient map from Par^n partitions of a fixed weight.
struct MonomialExpansion {
  int n = 0;
  int degree = 0;
  std::map<Partition, long long> terms;  // zero coefficients absent

  long long coeff(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? 0 : it->second;
  }
  void add(const Partition& p, long long c);
  MonomialExpansion& operator+=(const MonomialExpansion& o);
  MonomialExpansion& operator-=(const MonomialExpansion& o);
  MonomialExpansion& operator*=(long long c);
  bool operator==(const MonomialExpansion& o) const {
    return n == o.n && degree == o.degree && terms == o.terms;
  }
  std::string str() const;
};

MonomialExpansion operator+(MonomialExpansion a, const MonomialExpansion& b);
MonomialExpansion operator-(MonomialExpansion a, const MonomialExpansion& b);

// The unique cyclically decreasing element with reduced-word letters exactly
// the given proper subset of {1..n}; product of s_b s_{b-1} ... s_a over
// maximal cyclic runs [a, b] of the support.
AffinePerm cyclically_decreasing(int n, const std::set<int>& support);

// Expansion of the affine Stanley symmetric function of a: the coefficient
// of m_lambda counts length-additive factorizations of a into cyclically
// decreasing factors of lengths lambda_1, lambda_2, ...
MonomialExpansion stanley_expand(const AffinePerm& a);

// The unique Grassmannian element of the given shape in Par^n.
AffinePerm grassmannian_of_shape(int n, const Partition& lam);
// Affine Schur function F_lambda, as a monomial expansion.
MonomialExpansion affine_schur(int n, const Partition& lam);

// Coefficients in the affine Schur basis, via the unitriangular change of
// basis; throws std::logic_error if the triangular solve leaves a residual.
std::map<Partition, long long> to_schur_basis(const MonomialExpansion& e);

// lambda* = shape of the star of the Grassmannian element of shape lambda.
Partition star_partition(int n, const Partition& lam);

// The linear involution sending F_lambda to F_{lambda*}.
MonomialExpansion omega_plus(const MonomialExpansion& e);

}  // namespace affine
