#include "affine/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "affine/util.hpp"

namespace affine {

void MonomialExpansion::add(const Partition& p, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

MonomialExpansion& MonomialExpansion::operator+=(const MonomialExpansion& o) {
  if (n != o.n || (degree != o.degree && !terms.empty() && !o.terms.empty()))
    throw std::invalid_argument("expansion shape mismatch");
  if (terms.empty()) degree = o.degree;
  for (const auto& [p, c] : o.terms) add(p, c);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator-=(const MonomialExpansion& o) {
  if (n != o.n || (degree != o.degree && !terms.empty() && !o.terms.empty()))
    throw std::invalid_argument("expansion shape mismatch");
  if (terms.empty()) degree = o.degree;
  for (const auto& [p, c] : o.terms) add(p, -c);
  return *this;
}

MonomialExpansion& MonomialExpansion::operator*=(long long c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [p, v] : terms) v *= c;
  return *this;
}

MonomialExpansion operator+(MonomialExpansion a, const MonomialExpansion& b) { return a += b; }
MonomialExpansion operator-(MonomialExpansion a, const MonomialExpansion& b) { return a -= b; }

std::string MonomialExpansion::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print largest partition first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != 1) os << it->second << "*";
    os << "m[";
    for (size_t k = 0; k < it->first.size(); ++k) {
      if (k) os << ",";
      os << it->first[k];
    }
    os << "]";
  }
  return os.str();
}

namespace {

std::mutex cd_mutex;
// Per period: the cyclically decreasing element of every proper support.
std::map<int, std::map<std::set<int>, AffinePerm>> cd_cache;

AffinePerm build_cyclically_decreasing(int n, const std::set<int>& support) {
  AffinePerm d = AffinePerm::identity(n);
  std::vector<bool> in(n + 1, false);
  for (int i : support) in[i] = true;
  std::vector<bool> used(n + 1, false);
  for (int i : support) {
    if (used[i]) continue;
    // Maximal cyclic run [a, b] containing i.
    int a = i;
    while (in[(a - 2 + n) % n + 1] ) a = (a - 2 + n) % n + 1;
    int b = i;
    while (in[b % n + 1]) b = b % n + 1;
    for (int k = a;; k = k % n + 1) {
      used[k] = true;
      if (k == b) break;
    }
    // Factor s_b s_{b-1} ... s_a, indices decreasing cyclically.
    AffinePerm f = AffinePerm::identity(n);
    for (int k = b;; k = (k - 2 + n) % n + 1) {
      f = f * AffinePerm::simple(n, k);
      if (k == a) break;
    }
    d = d * f;  // runs are disjoint and non-adjacent, so factors commute
  }
  return d;
}

void self_check_cd(int n) {
  // Every proper support must give an element of length equal to its size.
  for (int mask = 0; mask < (1 << n) - 1; ++mask) {
    std::set<int> sup;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) sup.insert(i + 1);
    AffinePerm d = build_cyclically_decreasing(n, sup);
    if (length(d) != (long long)sup.size())
      throw std::logic_error("cyclically decreasing element of wrong length");
    cd_cache[n][sup] = d;
  }
}

const AffinePerm& cached_cd(int n, const std::set<int>& support) {
  std::lock_guard<std::mutex> lock(cd_mutex);
  auto it = cd_cache.find(n);
  if (it == cd_cache.end()) {
    if (n <= 8) {
      self_check_cd(n);
    }
    it = cd_cache.emplace(n, std::map<std::set<int>, AffinePerm>{}).first;
  }
  auto jt = it->second.find(support);
  if (jt == it->second.end())
    jt = it->second.emplace(support, build_cyclically_decreasing(n, support)).first;
  return jt->second;
}

}  // namespace

AffinePerm cyclically_decreasing(int n, const std::set<int>& support) {
  if ((int)support.size() >= n)
    throw std::invalid_argument("support must be a proper subset of {1..n}");
  for (int i : support)
    if (i < 1 || i > n) throw std::invalid_argument("support index out of range");
  return cached_cd(n, support);
}

namespace {

// Number of factorizations of a into cyclically decreasing factors of the
// exact lengths lam[idx], lam[idx+1], ....
long long count_factorizations(const AffinePerm& a, long long len_a, const Partition& lam,
                               size_t idx,
                               const std::vector<std::vector<std::set<int>>>& supports_by_size,
                               std::map<std::pair<std::vector<long long>, size_t>, long long>& memo) {
  if (idx == lam.size()) return a.is_identity() ? 1 : 0;
  auto key = std::make_pair(a.window(), idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int n = a.period();
  long long total = 0;
  for (const auto& sup : supports_by_size[lam[idx]]) {
    const AffinePerm& d = cyclically_decreasing(n, sup);
    AffinePerm rest = d.inverse() * a;
    long long len_rest = length(rest);
    if (len_rest != len_a - (long long)sup.size()) continue;
    total += count_factorizations(rest, len_rest, lam, idx + 1, supports_by_size, memo);
  }
  memo[key] = total;
  return total;
}

}  // namespace

MonomialExpansion stanley_expand(const AffinePerm& a) {
  int n = a.period();
  long long len = length(a);
  MonomialExpansion out;
  out.n = n;
  out.degree = (int)len;
  if (len == 0) {
    out.add({}, 1);
    return out;
  }
  std::vector<std::vector<std::set<int>>> supports_by_size(n);
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::set<int> sup;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) sup.insert(i + 1);
    supports_by_size[sup.size()].push_back(sup);
  }
  for (const Partition& lam : partitions_of((int)len, n - 1)) {
    std::map<std::pair<std::vector<long long>, size_t>, long long> memo;
    long long c = count_factorizations(a, len, lam, 0, supports_by_size, memo);
    out.add(lam, c);
  }
  return out;
}

AffinePerm grassmannian_of_shape(int n, const Partition& lam) {
  if (!in_par_n(lam, n)) throw std::invalid_argument("shape not in Par^n");
  Partition t = transpose(lam);
  std::vector<int> c(n, 0);
  // Weakly increasing rearrangement of the transpose, padded with zeros.
  std::sort(t.begin(), t.end());
  for (size_t i = 0; i < t.size(); ++i) c[n - t.size() + i] = t[i];
  return from_code(n, c).inverse();
}

namespace {

std::mutex schur_mutex;
std::map<std::pair<int, Partition>, MonomialExpansion> schur_cache;

}  // namespace

MonomialExpansion affine_schur(int n, const Partition& lam) {
  {
    std::lock_guard<std::mutex> lock(schur_mutex);
    auto it = schur_cache.find({n, lam});
    if (it != schur_cache.end()) return it->second;
  }
  MonomialExpansion e = stanley_expand(grassmannian_of_shape(n, lam));
  std::lock_guard<std::mutex> lock(schur_mutex);
  schur_cache.emplace(std::make_pair(n, lam), e);
  return e;
}

std::map<Partition, long long> to_schur_basis(const MonomialExpansion& e) {
  std::map<Partition, long long> out;
  MonomialExpansion residual = e;
  // Descending lexicographic order refines dominance, so subtracting leading
  // terms in this order is an exact triangular solve.
  for (const Partition& lam : partitions_of(e.degree, e.n - 1)) {
    long long c = residual.coeff(lam);
    if (c == 0) continue;
    out[lam] = c;
    MonomialExpansion f = affine_schur(e.n, lam);
    f *= c;
    residual -= f;
  }
  if (!residual.terms.empty())
    throw std::logic_error("affine Schur triangular solve left a nonzero residual");
  return out;
}

Partition star_partition(int n, const Partition& lam) {
  if (!in_par_n(lam, n)) throw std::invalid_argument("shape not in Par^n");
  return shape(star(grassmannian_of_shape(n, lam)));
}

MonomialExpansion omega_plus(const MonomialExpansion& e) {
  auto f = to_schur_basis(e);
  MonomialExpansion out;
  out.n = e.n;
  out.degree = e.degree;
  for (const auto& [lam, c] : f) {
    MonomialExpansion g = affine_schur(e.n, star_partition(e.n, lam));
    g *= c;
    out += g;
  }
  return out;
}

}  // namespace affine
