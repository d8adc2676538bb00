#include "doctest.h"

#include "affine/symfunc.hpp"
#include "oracles.hpp"

using namespace affine;

namespace {

MonomialExpansion expansion(int n, int degree, std::vector<std::pair<Partition, long long>> t) {
  MonomialExpansion e;
  e.n = n;
  e.degree = degree;
  for (auto& [p, c] : t) e.add(p, c);
  return e;
}

std::vector<AffinePerm> up_to_length(int n, int maxlen) {
  std::vector<AffinePerm> out;
  for (const auto& lvl : elements_by_length(n, maxlen)) out.insert(out.end(), lvl.begin(), lvl.end());
  return out;
}

}  // namespace

TEST_CASE("cyclically decreasing elements") {
  CHECK(cyclically_decreasing(4, {2, 4}) ==
        AffinePerm::simple(4, 2) * AffinePerm::simple(4, 4));
  CHECK(cyclically_decreasing(4, {1, 2}) ==
        AffinePerm::simple(4, 2) * AffinePerm::simple(4, 1));
  CHECK(cyclically_decreasing(4, {}).is_identity());
  CHECK_THROWS_AS(cyclically_decreasing(4, {1, 2, 3, 4}), std::invalid_argument);
  // Wrap-around run.
  CHECK(cyclically_decreasing(4, {4, 1}) ==
        AffinePerm::simple(4, 1) * AffinePerm::simple(4, 4));
  for (int n : {4, 6}) {
    for (int mask = 0; mask < (1 << n) - 1; ++mask) {
      std::set<int> sup;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) sup.insert(i + 1);
      CHECK(length(cyclically_decreasing(n, sup)) == (long long)sup.size());
    }
  }
}

TEST_CASE("Stanley expansion worked examples") {
  CHECK(stanley_expand(AffinePerm::from_window(4, {3, 0, 5, 2})) ==
        expansion(4, 4, {{{1, 1, 1, 1}, 4}, {{2, 1, 1}, 2}, {{2, 2}, 1}}));
  CHECK(stanley_expand(AffinePerm::from_window(4, {-3, 3, 4, 6})) ==
        expansion(4, 4, {{{1, 1, 1, 1}, 1}}));
  CHECK(stanley_expand(AffinePerm::from_window(4, {5, 0, 2, 3})) ==
        expansion(4, 4, {{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}, {{1, 1, 1, 1}, 1}}));
  CHECK(stanley_expand(AffinePerm::identity(4)) == expansion(4, 0, {{{}, 1}}));
}

TEST_CASE("Stanley expansion properties") {
  // Two-periodic case collapses to a single monomial.
  for (const auto& a : up_to_length(2, 5)) {
    MonomialExpansion e = stanley_expand(a);
    Partition ones((size_t)length(a), 1);
    CHECK(e == expansion(2, (int)length(a), {{ones, 1}}));
  }
  // Unitriangularity with respect to dominance, and positivity.
  for (const auto& a : up_to_length(4, 6)) {
    MonomialExpansion e = stanley_expand(a);
    Partition lead = shape(a);
    CHECK(e.coeff(lead) == 1);
    for (const auto& [p, c] : e.terms) {
      CHECK(c > 0);
      CHECK(weight(p) == e.degree);
      CHECK(in_par_n(p, 4));
      CHECK(dominance_leq(p, lead));
    }
  }
}

TEST_CASE("Grassmannian elements and affine Schur functions") {
  CHECK(affine_schur(4, {}) == expansion(4, 0, {{{}, 1}}));
  CHECK(affine_schur(2, {1, 1, 1}) == expansion(2, 3, {{{1, 1, 1}, 1}}));
  MonomialExpansion f22 = affine_schur(4, {2, 2});
  CHECK(f22.coeff({2, 2}) == 1);
  for (const auto& [p, c] : f22.terms) CHECK(dominance_leq(p, {2, 2}));
  CHECK(grassmannian_of_shape(4, {2, 2}).inverse() == from_code(4, {0, 0, 2, 2}));
  for (const Partition& lam : partitions_of(4, 3)) {
    AffinePerm g = grassmannian_of_shape(4, lam);
    CHECK(is_grassmannian(g));
    CHECK(shape(g) == lam);
  }
  CHECK_THROWS_AS(affine_schur(4, {4}), std::invalid_argument);
}

TEST_CASE("Schur basis conversion") {
  CHECK(to_schur_basis(affine_schur(4, {2, 2})) ==
        std::map<Partition, long long>{{{2, 2}, 1}});
  // Reassembling the basis coefficients reproduces the expansion.
  for (const auto& a : up_to_length(4, 5)) {
    MonomialExpansion e = stanley_expand(a);
    auto f = to_schur_basis(e);
    MonomialExpansion back;
    back.n = 4;
    back.degree = e.degree;
    for (const auto& [lam, c] : f) {
      MonomialExpansion g = affine_schur(4, lam);
      g *= c;
      back += g;
    }
    CHECK(back == e);
    for (const auto& [lam, c] : f) CHECK(c >= 0);  // affine Schur positivity, observed
  }
}

TEST_CASE("star partitions") {
  for (int w = 0; w <= 5; ++w) {
    for (const Partition& lam : partitions_of(w, 3)) {
      Partition st = star_partition(4, lam);
      CHECK(in_par_n(st, 4));
      CHECK(weight(st) == w);
      CHECK(star_partition(4, st) == lam);
    }
  }
}

TEST_CASE("omega involution") {
  CHECK(omega_plus(stanley_expand(AffinePerm::from_window(4, {-3, 3, 4, 6}))) ==
        stanley_expand(AffinePerm::from_window(4, {5, 0, 2, 3})));
  for (const auto& a : up_to_length(4, 5)) {
    MonomialExpansion e = stanley_expand(a);
    CHECK(omega_plus(e) == stanley_expand(a.inverse()));
    CHECK(omega_plus(e) == stanley_expand(star(a)));
    CHECK(omega_plus(omega_plus(e)) == e);
  }
}
