#include "affine/zlattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "affine/fpf.hpp"
#include "affine/order.hpp"
#include "affine/symfunc.hpp"
#include "affine/util.hpp"

namespace affine {

namespace {

bool row_is_zero(const std::vector<long long>& r) {
  return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

}  // namespace

IntLattice hnf_with_transform(std::vector<std::vector<long long>> rows,
                              std::vector<std::vector<long long>>* transform) {
  size_t m = rows.size();
  size_t dim = m == 0 ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != dim) throw std::invalid_argument("dimension mismatch");
  std::vector<std::vector<long long>> tr;
  if (transform) {
    tr.assign(m, std::vector<long long>(m, 0));
    for (size_t i = 0; i < m; ++i) tr[i][i] = 1;
  }
  auto rowop = [&](size_t a, size_t b, long long q) {
    // row_a -= q * row_b
    for (size_t c = 0; c < dim; ++c) rows[a][c] -= q * rows[b][c];
    if (transform)
      for (size_t c = 0; c < m; ++c) tr[a][c] -= q * tr[b][c];
  };
  auto rowswap = [&](size_t a, size_t b) {
    std::swap(rows[a], rows[b]);
    if (transform) std::swap(tr[a], tr[b]);
  };
  auto rowneg = [&](size_t a) {
    for (auto& x : rows[a]) x = -x;
    if (transform)
      for (auto& x : tr[a]) x = -x;
  };
  size_t top = 0;
  for (size_t col = 0; col < dim && top < m; ++col) {
    // Euclidean elimination below the working row.
    for (;;) {
      size_t best = m;
      for (size_t r = top; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        if (best == m || std::llabs(rows[r][col]) < std::llabs(rows[best][col])) best = r;
      }
      if (best == m) break;
      rowswap(top, best);
      bool clean = true;
      for (size_t r = top + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        long long q = rows[r][col] / rows[top][col];
        rowop(r, top, q);
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0) rowneg(top);
    // Reduce entries above the pivot into [0, pivot).
    for (size_t r = 0; r < top; ++r) {
      long long q = floor_div(rows[r][col], rows[top][col]);
      if (q != 0) rowop(r, top, q);
    }
    ++top;
  }
  IntLattice lat;
  lat.dim = (int)dim;
  for (size_t r = 0; r < top; ++r)
    if (!row_is_zero(rows[r])) lat.rows.push_back(rows[r]);
  if (transform) {
    transform->assign(tr.begin(), tr.begin() + lat.rows.size());
  }
  return lat;
}

IntLattice hnf(const std::vector<std::vector<long long>>& rows) {
  return hnf_with_transform(rows, nullptr);
}

bool span_contains(const IntLattice& lat, const std::vector<long long>& v) {
  if ((int)v.size() != lat.dim) throw std::invalid_argument("dimension mismatch");
  std::vector<long long> w = v;
  for (const auto& row : lat.rows) {
    size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (w[piv] % row[piv] != 0) continue;  // leave for the final zero test
    long long q = w[piv] / row[piv];
    for (size_t c = 0; c < w.size(); ++c) w[c] -= q * row[c];
  }
  return row_is_zero(w);
}

bool span_equal(const IntLattice& a, const IntLattice& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  return a.rows == b.rows;  // HNF is a canonical form
}

bool solve_in_span(const std::vector<std::vector<long long>>& gens,
                   const std::vector<long long>& v, std::vector<long long>* coords) {
  std::vector<std::vector<long long>> tr;
  IntLattice lat = hnf_with_transform(gens, &tr);
  if ((int)v.size() != lat.dim) throw std::invalid_argument("dimension mismatch");
  // Back-substitute v over the HNF rows, tracking the combination.
  std::vector<long long> w = v;
  std::vector<long long> hcoef(lat.rows.size(), 0);
  for (size_t r = 0; r < lat.rows.size(); ++r) {
    const auto& row = lat.rows[r];
    size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (w[piv] % row[piv] != 0) return false;
    long long q = w[piv] / row[piv];
    hcoef[r] = q;
    for (size_t c = 0; c < w.size(); ++c) w[c] -= q * row[c];
  }
  if (!row_is_zero(w)) return false;
  if (coords) {
    coords->assign(gens.size(), 0);
    for (size_t r = 0; r < lat.rows.size(); ++r)
      for (size_t g = 0; g < gens.size(); ++g) (*coords)[g] += hcoef[r] * tr[r][g];
  }
  return true;
}

std::vector<Partition> coefficient_index(int n, int degree) {
  return partitions_of(degree, n - 1);
}

namespace {

std::vector<long long> coeff_vector(const MonomialExpansion& e,
                                    const std::vector<Partition>& index) {
  std::vector<long long> v(index.size(), 0);
  for (size_t i = 0; i < index.size(); ++i) v[i] = e.coeff(index[i]);
  return v;
}

bool window_is_finite(const FpfInvolution& z) {
  for (long long i = 1; i <= z.period(); ++i)
    if (z(i) < 1 || z(i) > z.period()) return false;
  return true;
}

std::vector<std::vector<long long>> span_rows(int n, long long lmax, int degree,
                                              bool restrict_finite) {
  auto index = coefficient_index(n, degree);
  long long bound = std::max<long long>(lmax, degree);
  std::vector<std::vector<long long>> rows;
  for (int sign : {+1, -1}) {
    Universe u = build_universe(n, sign, bound);
    for (const auto& z : u.elements) {
      if (z.height() != degree) continue;  // expansions are homogeneous
      if (restrict_finite && !window_is_finite(z)) continue;
      rows.push_back(coeff_vector(fpf_stanley(z), index));
    }
  }
  if (rows.empty()) rows.push_back(std::vector<long long>(index.size(), 0));
  return rows;
}

}  // namespace

IntLattice fpf_span(int n, long long lmax, int degree, bool restrict_finite) {
  if (n % 2 != 0 || n <= 0) throw std::invalid_argument("requires even n");
  return hnf(span_rows(n, lmax, degree, restrict_finite));
}

namespace {

// Bounded deterministic search for a lattice basis among the vectors such
// that every vector is a nonnegative integer combination of it.
void positive_basis_search(const std::vector<std::vector<long long>>& vectors,
                           const IntLattice& lat, long long cap, DegreeReport* rep) {
  std::vector<std::vector<long long>> distinct = vectors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  int r = lat.rank();
  int m = (int)distinct.size();
  rep->subsets_tried = 0;
  rep->search_exhaustive = true;
  if (r == 0) {
    rep->positive_basis_found = true;
    return;
  }
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  if (m < r) {
    rep->positive_basis_found = false;
    return;
  }
  for (;;) {
    if (rep->subsets_tried >= cap) {
      rep->search_exhaustive = false;
      break;
    }
    ++rep->subsets_tried;
    std::vector<std::vector<long long>> sub;
    for (int i : pick) sub.push_back(distinct[i]);
    if (span_equal(hnf(sub), lat)) {
      bool allpos = true;
      for (const auto& v : distinct) {
        std::vector<long long> coords;
        if (!solve_in_span(sub, v, &coords) ||
            std::any_of(coords.begin(), coords.end(), [](long long c) { return c < 0; })) {
          allpos = false;
          break;
        }
      }
      if (allpos) {
        rep->positive_basis_found = true;
        return;
      }
    }
    // next r-combination of {0..m-1}
    int i = r - 1;
    while (i >= 0 && pick[i] == m - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < r; ++k) pick[k] = pick[k - 1] + 1;
  }
  rep->positive_basis_found = false;
}

}  // namespace

ConjectureReport conjecture_reports(int n, int dmax, long long subset_cap) {
  if (n % 2 != 0 || n <= 0) throw std::invalid_argument("requires even n");
  ConjectureReport rep;
  rep.n = n;
  rep.dmax = dmax;
  for (int d = 0; d <= dmax; ++d) {
    DegreeReport dr;
    dr.degree = d;
    auto rows = span_rows(n, d, d, false);
    IntLattice lat = hnf(rows);
    dr.rank = lat.rank();
    dr.rank_finite = fpf_span(n, d, d, true).rank();
    dr.saturated = span_equal(lat, fpf_span(n, d + 1, d, false));
    positive_basis_search(rows, lat, subset_cap, &dr);
    rep.degrees.push_back(dr);
  }
  for (int sign : {+1, -1}) {
    Universe u = build_universe(n, sign, dmax);
    for (const auto& z : u.elements) {
      MonomialExpansion f = fpf_stanley(z);
      ++rep.invariance_checked;
      if (!(omega_plus(f) == f)) {
        rep.invariance_holds = false;
        rep.invariance_witness = z.str();
        break;
      }
    }
    if (!rep.invariance_holds) break;
  }
  rep.verdict = rep.invariance_holds ? "consistent" : "falsified-with-witness";
  return rep;
}

}  // namespace affine
