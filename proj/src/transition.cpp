#include "affine/transition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "affine/util.hpp"

namespace affine {

namespace {

std::vector<AffinePerm> phi_scan_left(const AffinePerm& a, long long r, long long width) {
  int n = a.period();
  long long la = length(a);
  std::vector<AffinePerm> out;
  for (long long i = r - width; i < r; ++i) {
    if (floor_mod(r - i, n) == 0) continue;
    AffinePerm s = a * AffinePerm::transposition(n, i, r);
    if (length(s) == la + 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffinePerm> phi_scan_right(const AffinePerm& a, long long r, long long width) {
  int n = a.period();
  long long la = length(a);
  std::vector<AffinePerm> out;
  for (long long j = r + 1; j <= r + width; ++j) {
    if (floor_mod(j - r, n) == 0) continue;
    AffinePerm s = a * AffinePerm::transposition(n, r, j);
    if (length(s) == la + 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::pair<std::vector<AffinePerm>, std::vector<AffinePerm>> phi_sets(const AffinePerm& a,
                                                                     long long r) {
  long long width = (long long)a.period() * (2 + spread(a));
  auto left = phi_scan_left(a, r, width);
  auto right = phi_scan_right(a, r, width);
  if (phi_scan_left(a, r, 2 * width) != left || phi_scan_right(a, r, 2 * width) != right)
    throw std::logic_error("cover scan bound too small");
  return {left, right};
}

namespace {

std::vector<FpfInvolution> pi_scan(const FpfInvolution& y, long long r, bool leftward,
                                   long long width) {
  int n = y.period();
  long long ly = length(y.perm());
  std::vector<FpfInvolution> out;
  for (long long d = 1; d <= width; ++d) {
    long long i = leftward ? r - d : r;
    long long j = leftward ? r : r + d;
    long long moved = leftward ? i : j;
    if (floor_mod(moved - r, n) == 0 || floor_mod(moved - y(r), n) == 0) continue;
    AffinePerm t = AffinePerm::transposition(n, i, j);
    AffinePerm tyt = t * y.perm() * t;
    if (length(tyt) == ly + 2) out.push_back(FpfInvolution::from_perm(tyt));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::pair<std::vector<FpfInvolution>, std::vector<FpfInvolution>> pi_sets(const FpfInvolution& y,
                                                                          long long r) {
  long long width = (long long)y.period() * (2 + spread(y.perm()));
  auto left = pi_scan(y, r, true, width);
  auto right = pi_scan(y, r, false, width);
  if (pi_scan(y, r, true, 2 * width) != left || pi_scan(y, r, false, 2 * width) != right)
    throw std::logic_error("cover scan bound too small");
  return {left, right};
}

TransitionReport check_transition_fpf(const FpfInvolution& y, long long p) {
  long long q = y(p);
  if (p >= q) throw std::invalid_argument("transition requires p < y(p)");
  TransitionReport rep;
  rep.y = y;
  rep.p = p;
  rep.q = q;
  rep.lower = pi_sets(y, p).first;
  rep.upper = pi_sets(y, q).second;
  rep.lower_sum.n = y.period();
  rep.lower_sum.degree = (int)y.height() + 1;
  rep.upper_sum = rep.lower_sum;
  for (const auto& z : rep.lower) rep.lower_sum += fpf_stanley(z);
  for (const auto& z : rep.upper) rep.upper_sum += fpf_stanley(z);
  rep.equal = rep.lower_sum == rep.upper_sum;
  return rep;
}

BijectionReport atom_bijection_check(const FpfInvolution& y, const FpfInvolution& z) {
  BijectionReport rep;
  int n = y.period();
  if (z.height() != y.height() + 1 || y.sign() != z.sign())
    throw std::invalid_argument("not a cover pair");
  // All reflections conjugating y to z.
  std::vector<AffinePerm> ts;
  long long width = (long long)n * (2 + std::max(spread(y.perm()), spread(z.perm())));
  for (long long i = 1; i <= n; ++i) {
    for (long long j = i + 1; j <= i + width; ++j) {
      if (floor_mod(j - i, n) == 0) continue;
      AffinePerm t = AffinePerm::transposition(n, i, j);
      if (t * y.perm() * t == z.perm()) ts.push_back(t);
    }
  }
  if (ts.empty()) throw std::invalid_argument("not a cover pair");
  std::vector<AffinePerm> image;
  for (const AffinePerm& w : atoms(y)) {
    long long lw = length(w);
    for (const AffinePerm& t : ts) {
      AffinePerm wt = w * t;
      if (length(wt) == lw + 1) {
        ++rep.pairs;
        image.push_back(wt);
      }
    }
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    rep.pass = false;
    rep.witness = "pair map is not injective at y=" + y.str();
    return rep;
  }
  std::vector<AffinePerm> az = atoms(z);
  if (image != az) {
    rep.pass = false;
    rep.witness = "pair map image differs from the atom set of z=" + z.str();
  }
  return rep;
}

BijectionReport pi_subset_check(const FpfInvolution& y, long long p) {
  long long q = y(p);
  if (p >= q) throw std::invalid_argument("requires p < y(p)");
  BijectionReport rep;
  auto at_p = pi_sets(y, p);
  auto at_q = pi_sets(y, q);
  auto contains = [](const std::vector<FpfInvolution>& big, const std::vector<FpfInvolution>& s) {
    return std::includes(big.begin(), big.end(), s.begin(), s.end());
  };
  rep.pairs = at_p.second.size() + at_q.first.size();
  if (!contains(at_q.second, at_p.second)) {
    rep.pass = false;
    rep.witness = "upper cover set at p not contained in the one at q, y=" + y.str();
  } else if (!contains(at_p.first, at_q.first)) {
    rep.pass = false;
    rep.witness = "lower cover set at q not contained in the one at p, y=" + y.str();
  }
  return rep;
}

namespace {

bool in_mod_classes(long long x, long long a, long long b, int n) {
  return floor_mod(x - a, n) == 0 || floor_mod(x - b, n) == 0;
}

}  // namespace

std::vector<AtomTriple> n_minus_set(const FpfInvolution& y, long long p, long long q) {
  int n = y.period();
  long long width = (long long)n * (2 + spread(y.perm()));
  std::vector<AtomTriple> out;
  for (const AffinePerm& w : atoms(y)) {
    long long lw = length(w);
    for (long long j : {p, q}) {
      for (long long i = j - width; i < j; ++i) {
        if (in_mod_classes(i, p, q, n)) continue;
        if (length(w * AffinePerm::transposition(n, i, j)) != lw + 1) continue;
        auto [tz, delta] = conj_by_reflection(y, i, j);
        if (delta == 1) continue;
        out.push_back({w, i, j});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AtomTriple> n_plus_set(const FpfInvolution& y, long long p, long long q) {
  int n = y.period();
  long long width = (long long)n * (2 + spread(y.perm()));
  std::vector<AtomTriple> out;
  for (const AffinePerm& w : atoms(y)) {
    long long lw = length(w);
    for (long long i : {p, q}) {
      for (long long j = i + 1; j <= i + width; ++j) {
        if (in_mod_classes(j, p, q, n)) continue;
        if (length(w * AffinePerm::transposition(n, i, j)) != lw + 1) continue;
        auto [tz, delta] = conj_by_reflection(y, i, j);
        if (delta == 1) continue;
        out.push_back({w, i, j});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AtomTriple toggle(const FpfInvolution& y, const AtomTriple& t) {
  int n = y.period();
  long long k = y(t.j), l = y(t.i);
  if (k >= l || floor_mod(l - k, n) == 0)
    throw std::invalid_argument("toggle partner is not an ordered reflection");
  AffinePerm w2 = t.w * AffinePerm::transposition(n, t.i, t.j) *
                  AffinePerm::transposition(n, k, l);
  return {w2, k, l};
}

BijectionReport toggle_check(const FpfInvolution& y, long long p) {
  long long q = y(p);
  if (p >= q) throw std::invalid_argument("requires p < y(p)");
  BijectionReport rep;
  auto nm = n_minus_set(y, p, q);
  auto np = n_plus_set(y, p, q);
  std::vector<AtomTriple> image;
  for (const AtomTriple& t : nm) {
    AtomTriple u = toggle(y, t);
    if (!(toggle(y, u) == t)) {
      rep.pass = false;
      rep.witness = "toggle is not an involution at y=" + y.str();
      return rep;
    }
    image.push_back(u);
    ++rep.pairs;
  }
  std::sort(image.begin(), image.end());
  if (image != np) {
    rep.pass = false;
    rep.witness = "toggle image differs from the plus set at y=" + y.str();
  }
  return rep;
}

}  // namespace affine
