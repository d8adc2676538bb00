#include "affine/order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "affine/util.hpp"

namespace affine {

int Universe::index_of(const FpfInvolution& z) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), z,
                             [](const FpfInvolution& a, const FpfInvolution& b) {
                               return std::make_pair(a.height(), a.perm().window()) <
                                      std::make_pair(b.height(), b.perm().window());
                             });
  if (it != elements.end() && *it == z) return (int)(it - elements.begin());
  return -1;
}

Universe build_universe(int n, int sign, long long lmax, long long max_elements) {
  if (n % 2 != 0 || n <= 0) throw std::invalid_argument("universe requires even n");
  if (lmax < 0) throw std::invalid_argument("lmax must be nonnegative");
  Universe u;
  u.n = n;
  u.sign = sign;
  u.lmax = lmax;
  std::map<AffinePerm, FpfInvolution> seen;
  std::deque<FpfInvolution> queue{theta(n, sign)};
  seen.emplace(queue.front().perm(), queue.front());
  while (!queue.empty()) {
    FpfInvolution z = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      if (z.height() + conj_height_delta(z, i) > lmax) continue;
      FpfInvolution y = conj_simple(z, i);
      if (seen.emplace(y.perm(), y).second) {
        if ((long long)seen.size() > max_elements)
          throw std::runtime_error("universe exceeds the element cap");
        queue.push_back(y);
      }
    }
  }
  for (auto& [w, z] : seen) u.elements.push_back(z);
  std::sort(u.elements.begin(), u.elements.end(),
            [](const FpfInvolution& a, const FpfInvolution& b) {
              return std::make_pair(a.height(), a.perm().window()) <
                     std::make_pair(b.height(), b.perm().window());
            });
  for (const auto& z : u.elements) u.spread_bound = std::max(u.spread_bound, spread(z.perm()));
  u.down.resize(u.elements.size());
  u.up.resize(u.elements.size());
  for (int idx = 0; idx < (int)u.elements.size(); ++idx) {
    for (const auto& [t, y] : covers_down(u.elements[idx])) {
      int ydx = u.index_of(y);
      if (ydx < 0) throw std::logic_error("cover target missing from universe");
      u.down[idx].push_back({t.first, t.second, ydx});
      u.up[ydx].push_back({t.first, t.second, idx});
    }
  }
  for (auto& v : u.up) std::sort(v.begin(), v.end());
  return u;
}

std::vector<std::pair<std::pair<long long, long long>, FpfInvolution>> covers_down(
    const FpfInvolution& z, long long width) {
  int n = z.period();
  if (width < 0) width = (long long)n * (1 + spread(z.perm()));
  std::vector<std::pair<std::pair<long long, long long>, FpfInvolution>> out;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = i + 1; j <= i + width; ++j) {
      if (floor_mod(j - i, n) == 0) continue;
      AffinePerm t = AffinePerm::transposition(n, i, j);
      AffinePerm tzt = t * z.perm() * t;
      long long len = length(tzt);
      if (len != length(z.perm()) - 2) continue;
      out.emplace_back(std::make_pair(i, j), FpfInvolution::from_perm(tzt));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              return std::make_pair(a.first, a.second.perm().window()) <
                     std::make_pair(b.first, b.second.perm().window());
            });
  return out;
}

namespace {

long long real_height(const FpfInvolution& z) { return z.height(); }

}  // namespace

QpReport verify_qp1(const Universe& u, const HeightFn& height) {
  HeightFn ht = height ? height : real_height;
  QpReport rep;
  long long width = (long long)u.n * (2 + u.spread_bound);
  for (const auto& x : u.elements) {
    for (long long i = 1; i <= u.n; ++i) {
      for (long long j = i + 1; j <= i + width; ++j) {
        if (floor_mod(j - i, u.n) == 0) continue;
        AffinePerm t = AffinePerm::transposition(u.n, i, j);
        FpfInvolution rx = FpfInvolution::from_perm(t * x.perm() * t);
        ++rep.checks;
        if (ht(rx) == ht(x) && !(rx == x)) {
          rep.pass = false;
          rep.witness = "QP1 fails at x=" + x.str() + " with t_{" + std::to_string(i) + "," +
                        std::to_string(j) + "}";
          return rep;
        }
      }
    }
  }
  return rep;
}

QpReport verify_qp2(const Universe& u, const HeightFn& height) {
  HeightFn ht = height ? height : real_height;
  QpReport rep;
  long long width = (long long)u.n * (2 + u.spread_bound);
  for (const auto& x : u.elements) {
    for (long long i = 1; i <= u.n; ++i) {
      for (long long j = i + 1; j <= i + width; ++j) {
        if (floor_mod(j - i, u.n) == 0) continue;
        AffinePerm t = AffinePerm::transposition(u.n, i, j);
        FpfInvolution rx = FpfInvolution::from_perm(t * x.perm() * t);
        if (!(ht(rx) > ht(x))) continue;
        for (int s = 1; s <= u.n; ++s) {
          FpfInvolution srxs = conj_simple(rx, s);
          FpfInvolution sxs = conj_simple(x, s);
          ++rep.checks;
          if (ht(srxs) < ht(sxs) && !(rx == sxs)) {
            rep.pass = false;
            rep.witness = "QP2 fails at x=" + x.str() + ", t_{" + std::to_string(i) + "," +
                          std::to_string(j) + "}, s_" + std::to_string(s);
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

QpReport scan_completeness_check(const Universe& u) {
  QpReport rep;
  for (int idx = 0; idx < (int)u.elements.size(); ++idx) {
    const auto& z = u.elements[idx];
    long long base = (long long)u.n * (1 + spread(z.perm()));
    auto wide = covers_down(z, base + u.n);
    ++rep.checks;
    if (wide.size() != u.down[idx].size()) {
      rep.pass = false;
      rep.witness = "widened reflection scan found a new cover below " + z.str();
      return rep;
    }
  }
  return rep;
}

bool bruhat_leq_F(const Universe& u, const FpfInvolution& y, const FpfInvolution& z) {
  int yi = u.index_of(y), zi = u.index_of(z);
  if (yi < 0 || zi < 0) throw std::invalid_argument("element not in universe");
  if (yi == zi) return true;
  // Walk downward from z.
  std::vector<int> stack{zi};
  std::vector<bool> seen(u.elements.size(), false);
  seen[zi] = true;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (const auto& e : u.down[cur]) {
      if (e.target == yi) return true;
      if (!seen[e.target]) {
        seen[e.target] = true;
        stack.push_back(e.target);
      }
    }
  }
  return false;
}

QpReport atom_cover_check(const Universe& u) {
  QpReport rep;
  // Number of atoms of z covering at least one atom of y: a cover pair must
  // score all of them, a non-cover pair none.
  auto atoms_with_cover = [&](const FpfInvolution& y, const FpfInvolution& z) {
    size_t cnt = 0;
    for (const AffinePerm& w : atoms(z)) {
      for (const AffinePerm& v : atoms(y)) {
        if (bruhat_cover(v, w)) {
          ++cnt;
          break;
        }
      }
    }
    return cnt;
  };
  for (int zi = 0; zi < (int)u.elements.size(); ++zi) {
    const auto& z = u.elements[zi];
    std::vector<bool> is_cover(u.elements.size(), false);
    for (const auto& e : u.down[zi]) is_cover[e.target] = true;
    size_t n_atoms = atoms(z).size();
    for (int yi = 0; yi < (int)u.elements.size(); ++yi) {
      const auto& y = u.elements[yi];
      if (y.height() + 1 != z.height()) continue;
      ++rep.checks;
      size_t got = atoms_with_cover(y, z);
      if ((is_cover[yi] && got != n_atoms) || (!is_cover[yi] && got != 0)) {
        rep.pass = false;
        rep.witness = "atom-cover correspondence fails for y=" + y.str() + ", z=" + z.str();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace affine
