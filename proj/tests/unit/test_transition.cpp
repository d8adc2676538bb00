#include "doctest.h"

#include "affine/order.hpp"
#include "affine/transition.hpp"
#include "oracles.hpp"

using namespace affine;

namespace {

FpfInvolution fpf(std::vector<long long> w) {
  return FpfInvolution::from_window((int)w.size(), std::move(w));
}

// Universe-side oracle for the cover sets: enumerate all involutions one
// height above y and test the defining conjugation directly.
std::pair<std::set<FpfInvolution>, std::set<FpfInvolution>> pi_oracle(const FpfInvolution& y,
                                                                      long long r,
                                                                      const Universe& u) {
  int n = y.period();
  std::set<FpfInvolution> lo, hi;
  long long reach = 3 * n * (2 + spread(y.perm()));
  for (const auto& z : u.elements) {
    if (z.height() != y.height() + 1) continue;
    for (long long d = 1; d <= reach; ++d) {
      long long i = r - d;
      if ((i - r) % n != 0 && (i - y(r)) % n != 0) {
        AffinePerm t = AffinePerm::transposition(n, i, r);
        if (t * y.perm() * t == z.perm()) lo.insert(z);
      }
      long long j = r + d;
      if ((j - r) % n != 0 && (j - y(r)) % n != 0) {
        AffinePerm t = AffinePerm::transposition(n, r, j);
        if (t * y.perm() * t == z.perm()) hi.insert(z);
      }
    }
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("phi cover sets") {
  // For the identity the covers in either direction are the adjacent
  // transpositions only.
  AffinePerm id = AffinePerm::identity(4);
  for (long long r = 1; r <= 4; ++r) {
    auto [lo, hi] = phi_sets(id, r);
    CHECK(lo == std::vector<AffinePerm>{AffinePerm::transposition(4, r - 1, r)});
    CHECK(hi == std::vector<AffinePerm>{AffinePerm::transposition(4, r, r + 1)});
  }
  // Against a direct scan for a longer element.
  AffinePerm a = AffinePerm::from_window(4, {3, 0, 5, 2});
  auto [lo, hi] = phi_sets(a, 2);
  for (const auto& s : lo) {
    CHECK(length(s) == length(a) + 1);
    CHECK(is_reflection(a.inverse() * s));
  }
  std::set<AffinePerm> lo_direct;
  for (long long i = 2 - 48; i < 2; ++i) {
    if ((2 - i) % 4 == 0) continue;
    AffinePerm s = a * AffinePerm::transposition(4, i, 2);
    if (length(s) == length(a) + 1) lo_direct.insert(s);
  }
  CHECK(std::set<AffinePerm>(lo.begin(), lo.end()) == lo_direct);
}

TEST_CASE("column transition identity") {
  for (long long r = 1; r <= 4; ++r) {
    AffinePerm a = AffinePerm::from_window(4, {3, 0, 5, 2});
    auto [lo, hi] = phi_sets(a, r);
    MonomialExpansion ls, hs;
    ls.n = 4;
    ls.degree = (int)length(a) + 1;
    hs = ls;
    for (const auto& s : lo) ls += stanley_expand(s);
    for (const auto& s : hi) hs += stanley_expand(s);
    CHECK(ls == hs);
  }
  // Sweep over short elements.
  for (const auto& lvl : elements_by_length(4, 3)) {
    for (const AffinePerm& a : lvl) {
      for (long long r = 1; r <= 4; ++r) {
        auto [lo, hi] = phi_sets(a, r);
        MonomialExpansion ls, hs;
        ls.n = 4;
        ls.degree = (int)length(a) + 1;
        hs = ls;
        for (const auto& s : lo) ls += stanley_expand(s);
        for (const auto& s : hi) hs += stanley_expand(s);
        CHECK(ls == hs);
      }
    }
  }
}

TEST_CASE("pi cover sets") {
  FpfInvolution y = fpf({6, -3, 8, -1});
  auto lo = pi_sets(y, 1).first;
  CHECK(lo == std::vector<FpfInvolution>{fpf({-5, -4, 9, 10}), fpf({4, -5, 10, 1})});
  auto hi = pi_sets(y, 6).second;
  CHECK(hi == std::vector<FpfInvolution>{fpf({7, 8, -3, -2}), fpf({8, -1, 6, -3})});
  // Every member is a genuine cover.
  for (const auto& z : lo) CHECK(z.height() == y.height() + 1);
  for (const auto& z : hi) CHECK(z.height() == y.height() + 1);
  // The minimal element has covers reachable through its own column.
  FpfInvolution th = theta(4, +1);
  auto [tlo, thi] = pi_sets(th, 1);
  auto [tlo2, thi2] = pi_sets(th, 2);
  CHECK(tlo == std::vector<FpfInvolution>{fpf({-1, 0, 5, 6})});
  CHECK(thi2 == std::vector<FpfInvolution>{fpf({3, 4, 1, 2})});
  // Oracle agreement on a small sweep.
  for (int sign : {+1, -1}) {
    Universe u = build_universe(4, sign, 2);
    Universe above = build_universe(4, sign, 3);
    for (const auto& yy : u.elements) {
      for (long long p = 1; p <= 4; ++p) {
        auto got = pi_sets(yy, p);
        auto expect = pi_oracle(yy, p, above);
        CHECK(std::set<FpfInvolution>(got.first.begin(), got.first.end()) == expect.first);
        CHECK(std::set<FpfInvolution>(got.second.begin(), got.second.end()) == expect.second);
      }
    }
  }
}

TEST_CASE("FPF transition identity") {
  FpfInvolution y = fpf({6, -3, 8, -1});
  TransitionReport rep = check_transition_fpf(y, 1);
  CHECK(rep.q == 6);
  CHECK(rep.equal);
  MonomialExpansion expect;
  expect.n = 4;
  expect.degree = 5;
  expect.add({1, 1, 1, 1, 1}, 12);
  expect.add({2, 1, 1, 1}, 6);
  expect.add({2, 2, 1}, 3);
  expect.add({3, 1, 1}, 2);
  expect.add({3, 2}, 1);
  CHECK(rep.lower_sum == expect);
  CHECK(rep.upper_sum == expect);

  TransitionReport t0 = check_transition_fpf(theta(4, +1), 1);
  CHECK(t0.equal);
  CHECK_THROWS_AS(check_transition_fpf(y, 6), std::invalid_argument);

  for (int sign : {+1, -1}) {
    Universe u = build_universe(4, sign, 2);
    for (const auto& yy : u.elements)
      for (long long p = 1; p <= 4; ++p)
        if (p < yy(p)) CHECK(check_transition_fpf(yy, p).equal);
  }
}

TEST_CASE("atom bijection across a cover") {
  FpfInvolution y = fpf({6, -3, 8, -1});
  FpfInvolution z = fpf({4, -5, 10, 1});
  BijectionReport rep = atom_bijection_check(y, z);
  CHECK(rep.pass);
  CHECK(rep.pairs == atoms(z).size());
  CHECK_THROWS_AS(atom_bijection_check(y, fpf({6, -3, 8, -1})), std::invalid_argument);
  for (int sign : {+1, -1}) {
    Universe u = build_universe(4, sign, 2);
    for (int zi = 0; zi < (int)u.elements.size(); ++zi) {
      for (const auto& e : u.down[zi]) {
        BijectionReport r = atom_bijection_check(u.elements[e.target], u.elements[zi]);
        CHECK(r.pass);
        CHECK(r.pairs == atoms(u.elements[zi]).size());
      }
    }
  }
}

TEST_CASE("cover set inclusions and the toggle involution") {
  FpfInvolution y = fpf({6, -3, 8, -1});
  CHECK(pi_subset_check(y, 1).pass);
  CHECK(toggle_check(y, 1).pass);
  for (int sign : {+1, -1}) {
    Universe u = build_universe(4, sign, 2);
    for (const auto& yy : u.elements) {
      for (long long p = 1; p <= 4; ++p) {
        if (p >= yy(p)) continue;
        CHECK(pi_subset_check(yy, p).pass);
        CHECK(toggle_check(yy, p).pass);
      }
    }
  }
  // Two-case criterion for coinciding reflection conjugates on samples.
  Universe u = build_universe(4, +1, 2);
  for (const auto& yy : u.elements) {
    for (long long i = 1; i <= 4; ++i) {
      for (long long j = i + 1; j <= i + 8; ++j) {
        if ((j - i) % 4 == 0) continue;
        AffinePerm t = AffinePerm::transposition(4, i, j);
        AffinePerm tyt = t * yy.perm() * t;
        if (tyt == yy.perm()) continue;
        AffinePerm ytyp = yy.perm() * t * yy.perm();
        for (long long k = 1; k <= 4; ++k) {
          for (long long l = k + 1; l <= k + 12; ++l) {
            if ((l - k) % 4 == 0) continue;
            AffinePerm r = AffinePerm::transposition(4, k, l);
            bool same = r * yy.perm() * r == tyt;
            bool expected = (yy(i) - j) % 4 == 0 ? r == t : (r == t || r == ytyp);
            CHECK(same == expected);
          }
        }
      }
    }
  }
}
