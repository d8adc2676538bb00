#pragma once

#include <map>
#include <vector>

#include "affine/fpf.hpp"
#include "affine/laurent.hpp"
#include "affine/order.hpp"

namespace affine {

enum class Variant { M, N };

// Element of the module M or N: a finite Laurent-coefficient combination of
// standard basis vectors indexed by fixed-point-free involutions.
struct ModuleElement {
  Variant var = Variant::M;
  int n = 0;
  std::map<FpfInvolution, LaurentPoly> terms;  // zero terms absent

  static ModuleElement basis(Variant var, const FpfInvolution& z);
  LaurentPoly coeff(const FpfInvolution& z) const;
  void add(const FpfInvolution& z, const LaurentPoly& p);
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement scaled(const LaurentPoly& p) const;
  bool operator==(const ModuleElement& o) const = default;
  std::string str() const;
};

ModuleElement operator+(ModuleElement a, const ModuleElement& b);
ModuleElement operator-(ModuleElement a, const ModuleElement& b);

// Action of the Hecke generator H_s, s in {1..n}, by the three-case rule
// keyed to the height change of the conjugation.
ModuleElement act(int s, const ModuleElement& e);

// The antilinear involution fixing the standard basis vector of Theta and
// commuting with the bar operator on the algebra.
ModuleElement bar(const ModuleElement& e);

// Canonical bases over a downward-closed universe: for each element the
// unique bar-fixed element, unitriangular with strictly-negative-exponent
// coefficients below the diagonal. Indexed like u.elements.
std::vector<ModuleElement> canonical_basis(const Universe& u, Variant var);

// W-graph attached to a canonical basis: tau-sets from the quasiparabolic
// Bruhat order, edge weights symmetrizing the v^{-1} coefficients.
struct WGraph {
  int n = 0;
  Variant var = Variant::M;
  bool truncated = false;                  // heights at the universe bound may
                                           // have edges beyond the universe
  std::vector<std::vector<int>> tau;       // per vertex, sorted simple indices
  std::map<std::pair<int, int>, long long> mu;     // v^{-1} coefficients
  std::map<std::pair<int, int>, long long> omega;  // nonzero edge weights
};

WGraph w_graph(const Universe& u, Variant var, const std::vector<ModuleElement>& basis);

// Strongly connected components of the omega-edge digraph, each sorted; the
// list is ordered by smallest vertex.
std::vector<std::vector<int>> cells(const WGraph& g, int num_vertices);
// Components under doubly-directed edges.
std::vector<std::vector<int>> molecules(const WGraph& g, int num_vertices);

}  // namespace affine
