#pragma once

#include <string>
#include <vector>

#include "affine/partition.hpp"

namespace affine {

// Integer row lattice in row Hermite normal form: staircase pivots, positive
// pivot entries, entries above each pivot reduced into [0, pivot).
struct IntLattice {
  int dim = 0;
  std::vector<std::vector<long long>> rows;  // the HNF basis, rank = rows.size()
  int rank() const { return (int)rows.size(); }
  bool operator==(const IntLattice& o) const = default;
};

IntLattice hnf(const std::vector<std::vector<long long>>& rows);
// Also returns a transform expressing each HNF row as an integer combination
// of the input rows.
IntLattice hnf_with_transform(std::vector<std::vector<long long>> rows,
                              std::vector<std::vector<long long>>* transform);
bool span_contains(const IntLattice& lat, const std::vector<long long>& v);
bool span_equal(const IntLattice& a, const IntLattice& b);
// Coordinates of v in an arbitrary generating set, when v lies in its span
// and the coordinates are determined; empty optional otherwise.
bool solve_in_span(const std::vector<std::vector<long long>>& gens,
                   const std::vector<long long>& v, std::vector<long long>* coords);

// Fixed coefficient-vector indexing: partitions of the degree with parts at
// most n-1, in descending lexicographic order.
std::vector<Partition> coefficient_index(int n, int degree);

// Lattice spanned by the degree-d coefficient vectors of the FPF Stanley
// functions over both sign classes with height <= max(lmax, d); restricted
// to finite-window elements when restrict_finite is set.
IntLattice fpf_span(int n, long long lmax, int degree, bool restrict_finite);

struct DegreeReport {
  int degree = 0;
  int rank = 0;
  int rank_finite = 0;
  bool saturated = false;       // rank unchanged when the height bound grows
  bool positive_basis_found = false;
  long long subsets_tried = 0;
  bool search_exhaustive = false;
};

struct ConjectureReport {
  int n = 0;
  int dmax = 0;
  std::vector<DegreeReport> degrees;
  // Status of the invariance of the FPF Stanley functions under the affine
  // Schur involution, swept over both sign classes up to height dmax.
  long long invariance_checked = 0;
  bool invariance_holds = true;
  std::string invariance_witness;
  std::string verdict;  // "consistent" or "falsified-with-witness"
};

ConjectureReport conjecture_reports(int n, int dmax, long long subset_cap = 50000);

}  // namespace affine
