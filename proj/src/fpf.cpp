#include "affine/fpf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "affine/util.hpp"

namespace affine {

FpfInvolution FpfInvolution::from_perm(const AffinePerm& p) {
  int n = p.period();
  if (n % 2 != 0) throw std::invalid_argument("fixed-point-free involutions require even n");
  for (long long i = 1; i <= n; ++i) {
    if (p(i) == i)
      throw std::invalid_argument("fixed point at " + std::to_string(i));
    if (p(p(i)) != i)
      throw std::invalid_argument("not an involution: moves " + std::to_string(i) + " -> " +
                                  std::to_string(p(i)) + " -> " + std::to_string(p(p(i))));
  }
  long long num = 0;
  for (long long i = 1; i <= n; ++i) num += std::llabs(p(i) - residue_1n(p(i), n));
  if (num % (2 * n) != 0) throw std::logic_error("beta is not an integer");
  FpfInvolution z;
  z.p_ = p;
  z.beta_ = num / (2 * n);
  long long len = length(p);
  if ((len - n / 2) % 2 != 0 || len < n / 2) throw std::logic_error("height is not a natural number");
  z.height_ = (len - n / 2) / 2;
  return z;
}

FpfInvolution FpfInvolution::from_window(int n, const std::vector<long long>& w) {
  return from_perm(AffinePerm::from_window(n, w));
}

FpfInvolution theta(int n, int sign) {
  if (n % 2 != 0 || n <= 0) throw std::invalid_argument("theta requires even n");
  AffinePerm p = AffinePerm::identity(n);
  int start = sign > 0 ? 1 : 2;
  for (int i = start; i <= n; i += 2) p = p * AffinePerm::simple(n, i);
  return FpfInvolution::from_perm(p);
}

FpfInvolution conj_simple(const FpfInvolution& z, long long i) {
  int n = z.period();
  AffinePerm s = AffinePerm::simple(n, i);
  return FpfInvolution::from_perm(s * z.perm() * s);
}

int conj_height_delta(const FpfInvolution& z, long long i) {
  long long a = z(i), b = z(i + 1);
  if (a == i + 1) return 0;
  return a > b ? -1 : +1;
}

std::pair<FpfInvolution, long long> conj_by_reflection(const FpfInvolution& z, long long i,
                                                       long long j) {
  int n = z.period();
  if (i >= j || floor_mod(j - i, n) == 0)
    throw std::invalid_argument("reflection requires i < j, j != i (mod n)");
  AffinePerm t = AffinePerm::transposition(n, i, j);
  AffinePerm tzt = t * z.perm() * t;
  long long lz = length(z.perm());
  long long ltzt;
  if (floor_mod(z(i) - j, n) != 0) {
    if (z(i) < z(j))
      ltzt = lz + 2 * delta_count(t * z.perm(), i, j) + 2 * delta_count(z.perm(), i, j) + 2;
    else
      ltzt = lz - 2 * delta_count(tzt, i, j) - 2 * delta_count(z.perm() * t, i, j) - 2;
  } else {
    long long m = (z(i) - j) / n;
    long long span = j - i;  // m = +-span/(2n) is impossible since j != i mod n
    if (2 * n * m < -span)
      ltzt = lz + 2 * delta_count(t * z.perm(), i, j) + 2 * delta_count(z.perm(), i, j) + 2;
    else if (2 * n * m > span)
      ltzt = lz - 2 * delta_count(tzt, i, j) - 2 * delta_count(z.perm() * t, i, j) - 2;
    else
      ltzt = lz + 2 * delta_count(t * z.perm(), i, j) - 2 * delta_count(z.perm() * t, i, j);
  }
  FpfInvolution out = FpfInvolution::from_perm(tzt);
  if (2 * out.height() + n / 2 != ltzt)
    throw std::logic_error("conjugation length formula disagrees with recomputation");
  return {out, out.height() - z.height()};
}

namespace {

// Cycle pairs (a_i, b_i=z(a_i)) with a_i in [n] listed increasingly.
std::vector<std::pair<long long, long long>> increasing_cycles(const FpfInvolution& z) {
  std::vector<std::pair<long long, long long>> out;
  for (long long a = 1; a <= z.period(); ++a)
    if (a < z(a)) out.emplace_back(a, z(a));
  return out;
}

std::vector<std::pair<long long, long long>> decreasing_cycles(const FpfInvolution& z) {
  std::vector<std::pair<long long, long long>> out;
  for (long long d = 1; d <= z.period(); ++d)
    if (z(d) < d) out.emplace_back(z(d), d);
  return out;
}

AffinePerm perm_from_flat_window(int n, const std::vector<long long>& flat) {
  return AffinePerm::from_any_window(n, flat).inverse();
}

}  // namespace

AffinePerm alpha_min(const FpfInvolution& z) {
  std::vector<long long> flat;
  for (auto [a, b] : increasing_cycles(z)) {
    flat.push_back(a);
    flat.push_back(b);
  }
  return perm_from_flat_window(z.period(), flat);
}

AffinePerm alpha_max(const FpfInvolution& z) {
  std::vector<long long> flat;
  for (auto [c, d] : decreasing_cycles(z)) {
    flat.push_back(c);
    flat.push_back(d);
  }
  return perm_from_flat_window(z.period(), flat);
}

namespace {

std::mutex atoms_mutex;
std::map<std::vector<long long>, std::vector<AffinePerm>> atoms_cache;

std::vector<AffinePerm> atoms_impl(const FpfInvolution& z) {
  {
    std::lock_guard<std::mutex> lock(atoms_mutex);
    auto it = atoms_cache.find(z.perm().window());
    if (it != atoms_cache.end()) return it->second;
  }
  std::vector<AffinePerm> out;
  if (z.height() == 0) {
    out.push_back(AffinePerm::identity(z.period()));
  } else {
    std::set<AffinePerm> acc;
    for (int i = 1; i <= z.period(); ++i) {
      if (conj_height_delta(z, i) != -1) continue;
      FpfInvolution y = conj_simple(z, i);
      AffinePerm s = AffinePerm::simple(z.period(), i);
      for (const AffinePerm& v : atoms_impl(y)) {
        if (v(i) < v(i + 1)) acc.insert(v * s);
      }
    }
    out.assign(acc.begin(), acc.end());
  }
  std::lock_guard<std::mutex> lock(atoms_mutex);
  atoms_cache.emplace(z.perm().window(), out);
  return out;
}

}  // namespace

std::vector<AffinePerm> atoms(const FpfInvolution& z) { return atoms_impl(z); }

namespace {

// Pair decomposition of an atom w for z: the window of w^{-1} starting at
// offset k splits into consecutive cycle pairs when Theta pairs k+1 with k+2.
// For the + class pair slots start at odd integers, for - at even ones.
std::vector<std::pair<long long, long long>> atom_pairs(const AffinePerm& w, int sign,
                                                        long long align) {
  int n = w.period();
  AffinePerm wi = w.inverse();
  long long start = (sign > 0 ? 1 : 2) + 2 * align;
  std::vector<std::pair<long long, long long>> pairs;
  for (long long p = start; p < start + n; p += 2) pairs.emplace_back(wi(p), wi(p + 1));
  return pairs;
}

AffinePerm atom_from_pairs(int n, const std::vector<std::pair<long long, long long>>& pairs) {
  std::vector<long long> flat;
  for (auto [a, b] : pairs) {
    flat.push_back(a);
    flat.push_back(b);
  }
  return perm_from_flat_window(n, flat);
}

// Single upward cover moves from w in the atom order.
std::vector<AffinePerm> atom_up_moves(const AffinePerm& w, int sign, bool all_alignments) {
  int n = w.period();
  int l = n / 2;
  std::vector<AffinePerm> out;
  for (long long align = 0; align < (all_alignments ? l : 1); ++align) {
    auto pairs = atom_pairs(w, sign, align);
    for (int k = 0; k + 1 < l; ++k) {
      auto [a, d] = pairs[k];
      auto [b, c] = pairs[k + 1];
      if (a < b && b < c && c < d) {
        auto np = pairs;
        np[k] = {b, c};
        np[k + 1] = {a, d};
        out.push_back(atom_from_pairs(n, np));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<AffinePerm> atoms_by_closure(const FpfInvolution& z, bool all_alignments) {
  std::set<AffinePerm> seen;
  std::vector<AffinePerm> queue{alpha_min(z)};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    AffinePerm w = queue.back();
    queue.pop_back();
    for (const AffinePerm& u : atom_up_moves(w, z.sign(), all_alignments)) {
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

AtomPoset atom_poset(const FpfInvolution& z) {
  AtomPoset ps;
  ps.elements = atoms(z);
  std::map<AffinePerm, int> idx;
  for (int i = 0; i < (int)ps.elements.size(); ++i) idx[ps.elements[i]] = i;
  for (int i = 0; i < (int)ps.elements.size(); ++i) {
    for (const AffinePerm& u : atom_up_moves(ps.elements[i], z.sign(), true)) {
      auto it = idx.find(u);
      if (it == idx.end()) throw std::logic_error("atom cover move left the atom set");
      ps.covers.emplace_back(i, it->second);
    }
  }
  std::sort(ps.covers.begin(), ps.covers.end());
  ps.covers.erase(std::unique(ps.covers.begin(), ps.covers.end()), ps.covers.end());
  return ps;
}

std::vector<int> fpf_code(const FpfInvolution& z) {
  int n = z.period();
  std::vector<int> c(n, 0);
  for (long long i = 1; i <= n; ++i) {
    long long bound = std::min(i, z(i));  // z(j) < bound and j > i
    long long cnt = 0;
    for (long long r = 1; r <= n; ++r) {
      // j = r + kn, z(j) = z(r) + kn.
      long long kmin = floor_div(i - r, n) + 1;
      long long kmax = ceil_div(bound - z(r), n) - 1;
      if (kmax >= kmin) cnt += kmax - kmin + 1;
    }
    c[i - 1] = (int)cnt;
  }
  return c;
}

std::set<int> visible_descents(const FpfInvolution& z) {
  std::set<int> out;
  for (long long i = 1; i <= z.period(); ++i)
    if (std::min(i, z(i)) > z(i + 1)) out.insert((int)i);
  return out;
}

Partition nu(const FpfInvolution& z) {
  std::vector<int> c = fpf_code(z);
  std::sort(c.begin(), c.end(), std::greater<int>());
  while (!c.empty() && c.back() == 0) c.pop_back();
  return transpose(c);
}

MonomialExpansion fpf_stanley(const FpfInvolution& z) {
  MonomialExpansion out;
  out.n = z.period();
  out.degree = (int)z.height();
  for (const AffinePerm& w : atoms(z)) out += stanley_expand(w);
  return out;
}

bool is_321_avoiding(const FpfInvolution& z) {
  int n = z.period();
  long long reach = 2 * n * (1 + spread(z.perm()));
  for (long long i = 1; i <= n; ++i) {
    for (long long j = i + 1; j <= i + reach; ++j) {
      if (z(i) <= z(j)) continue;
      for (long long k = j + 1; k <= i + reach; ++k) {
        if (z(j) > z(k)) return false;
      }
    }
  }
  return true;
}

}  // namespace affine
