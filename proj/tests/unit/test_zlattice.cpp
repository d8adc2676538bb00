#include "doctest.h"

#include <random>
#include <stdexcept>

#include "affine/zlattice.hpp"

using namespace affine;

using Mat = std::vector<std::vector<long long>>;

TEST_CASE("Hermite normal form") {
  Mat id3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(hnf(id3).rows == id3);
  CHECK(hnf(Mat{{0, 0}, {0, 0}}).rank() == 0);
  // Idempotence and invariance under unimodular row operations.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Mat m(3, std::vector<long long>(4));
    for (auto& row : m)
      for (auto& x : row) x = (long long)(rng() % 11) - 5;
    IntLattice h = hnf(m);
    CHECK(hnf(h.rows).rows == h.rows);
    Mat m2 = m;
    m2[0][0] += 0;  // swap and shear
    std::swap(m2[0], m2[1]);
    for (int c = 0; c < 4; ++c) m2[2][c] += 3 * m2[0][c] - 2 * m2[1][c];
    CHECK(span_equal(hnf(m2), h));
    for (const auto& row : m) CHECK(span_contains(h, row));
  }
  CHECK_THROWS_AS(hnf(Mat{{1, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("span queries") {
  IntLattice two = hnf(Mat{{2, 0}, {0, 2}});
  IntLattice one = hnf(Mat{{1, 0}, {0, 1}});
  CHECK_FALSE(span_equal(two, one));
  CHECK(span_contains(two, {4, -2}));
  CHECK_FALSE(span_contains(two, {1, 0}));
  CHECK_THROWS_AS(span_contains(two, {1, 0, 0}), std::invalid_argument);
  // Solving coordinates in a spanning set.
  Mat gens{{1, 2, 0}, {0, 1, 1}, {1, 3, 1}};
  std::vector<long long> coords;
  CHECK(solve_in_span(gens, {2, 5, 1}, &coords));
  std::vector<long long> back(3, 0);
  for (size_t g = 0; g < gens.size(); ++g)
    for (int c = 0; c < 3; ++c) back[c] += coords[g] * gens[g][c];
  CHECK(back == std::vector<long long>{2, 5, 1});
  CHECK_FALSE(solve_in_span(gens, {0, 0, 2}, nullptr));
}

TEST_CASE("FPF span lattices") {
  CHECK(fpf_span(4, 0, 0, false).rank() == 1);
  for (int d = 0; d <= 4; ++d) CHECK(fpf_span(2, d, d, false).rank() == 1);
  IntLattice l3 = fpf_span(4, 3, 3, false);
  CHECK(l3.rank() >= 1);
  // Heights above the degree contribute nothing at that degree.
  CHECK(span_equal(l3, fpf_span(4, 4, 3, false)));
  CHECK(fpf_span(4, 3, 3, true).rank() <= l3.rank());
  CHECK_THROWS_AS(fpf_span(3, 1, 1, false), std::invalid_argument);
}

TEST_CASE("conjecture report") {
  ConjectureReport r2 = conjecture_reports(2, 3);
  CHECK(r2.verdict == "consistent");
  for (const auto& d : r2.degrees) {
    CHECK(d.rank == 1);
    CHECK(d.positive_basis_found);
    CHECK(d.saturated);
  }
  // Deterministic across runs.
  ConjectureReport again = conjecture_reports(2, 3);
  CHECK(again.degrees.size() == r2.degrees.size());
  for (size_t i = 0; i < again.degrees.size(); ++i) {
    CHECK(again.degrees[i].rank == r2.degrees[i].rank);
    CHECK(again.degrees[i].subsets_tried == r2.degrees[i].subsets_tried);
  }
  CHECK(r2.invariance_holds);
}
