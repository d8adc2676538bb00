#include "affine/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "affine/util.hpp"

namespace affine {

namespace {

void check_period(int n) {
  if (n < 1) throw std::invalid_argument("period must be positive, got " + std::to_string(n));
}

}  // namespace

AffinePerm AffinePerm::identity(int n) {
  check_period(n);
  AffinePerm p;
  p.n_ = n;
  p.win_.resize(n);
  std::iota(p.win_.begin(), p.win_.end(), 1);
  return p;
}

AffinePerm AffinePerm::from_window(int n, const std::vector<long long>& window) {
  check_period(n);
  if ((int)window.size() != n)
    throw std::invalid_argument("window has " + std::to_string(window.size()) +
                                " entries, expected " + std::to_string(n));
  std::vector<int> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    int r = (int)residue_1n(window[i], n);
    if (seen[r - 1])
      throw std::invalid_argument("window residues collide modulo " + std::to_string(n) +
                                  ": value " + std::to_string(window[i]) + " at position " +
                                  std::to_string(i + 1));
    seen[r - 1] = 1;
  }
  long long sum = std::accumulate(window.begin(), window.end(), 0LL);
  long long want = (long long)n * (n + 1) / 2;
  if (sum != want)
    throw std::invalid_argument("window sum " + std::to_string(sum) + " != " +
                                std::to_string(want));
  AffinePerm p;
  p.n_ = n;
  p.win_ = window;
  return p;
}

AffinePerm AffinePerm::from_any_window(int n, const std::vector<long long>& values) {
  check_period(n);
  if ((int)values.size() != n)
    throw std::invalid_argument("window has wrong number of entries");
  long long sum = std::accumulate(values.begin(), values.end(), 0LL);
  long long base = (long long)n * (n + 1) / 2;
  long long off = sum - base;
  if (off % n != 0)
    throw std::invalid_argument("sequence sum is not congruent to a window sum");
  long long k = off / n;  // values[j] = pi(k + j + 1)
  std::vector<long long> win(n);
  std::vector<int> seen(n, 0);
  for (int j = 0; j < n; ++j) {
    long long pos = k + j + 1;
    long long r = residue_1n(pos, n);
    win[r - 1] = values[j] - (pos - r);
    int vr = (int)residue_1n(values[j], n);
    if (seen[vr - 1]) throw std::invalid_argument("window residues collide");
    seen[vr - 1] = 1;
  }
  return from_window(n, win);
}

AffinePerm AffinePerm::simple(int n, long long i) {
  check_period(n);
  long long r = residue_1n(i, n);
  AffinePerm p = identity(n);
  if (r < n) {
    std::swap(p.win_[r - 1], p.win_[r]);
  } else {
    p.win_[n - 1] = n + 1;
    p.win_[0] = 0;
  }
  return p;
}

AffinePerm AffinePerm::transposition(int n, long long i, long long j) {
  check_period(n);
  if (i >= j) throw std::invalid_argument("transposition requires i < j");
  if (floor_mod(j - i, n) == 0)
    throw std::invalid_argument("transposition requires j != i (mod n)");
  AffinePerm p = identity(n);
  long long d = j - i;
  long long ri = residue_1n(i, n), rj = residue_1n(j, n);
  p.win_[ri - 1] = ri + d;
  p.win_[rj - 1] = rj - d;
  return p;
}

long long AffinePerm::operator()(long long i) const {
  long long r = residue_1n(i, n_);
  return win_[r - 1] + (i - r);
}

AffinePerm AffinePerm::operator*(const AffinePerm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("period mismatch in composition");
  AffinePerm p;
  p.n_ = n_;
  p.win_.resize(n_);
  for (int i = 0; i < n_; ++i) p.win_[i] = (*this)(o.win_[i]);
  return p;
}

AffinePerm AffinePerm::inverse() const {
  AffinePerm p;
  p.n_ = n_;
  p.win_.resize(n_);
  for (int r = 1; r <= n_; ++r) {
    // Position mapped to r: win_[q-1] = r (mod n) determines the shift.
    for (int q = 1; q <= n_; ++q) {
      if (floor_mod(win_[q - 1] - r, n_) == 0) {
        long long shift = r - win_[q - 1];
        p.win_[r - 1] = q + shift;
        break;
      }
    }
  }
  return p;
}

bool AffinePerm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (win_[i] != i + 1) return false;
  return true;
}

std::string AffinePerm::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << win_[i];
  }
  os << ']';
  return os.str();
}

std::vector<int> code(const AffinePerm& a) {
  int n = a.period();
  const auto& w = a.window();
  std::vector<int> c(n, 0);
  for (int i = 1; i <= n; ++i) {
    long long ci = 0;
    for (int r = 1; r <= n; ++r) {
      // j = r + kn with j > i and w(j) < w(i).
      long long kmin = floor_div(i - r, n) + 1;
      long long kmax = ceil_div(w[i - 1] - w[r - 1], n) - 1;
      if (kmax >= kmin) ci += kmax - kmin + 1;
    }
    c[i - 1] = (int)ci;
  }
  return c;
}

long long length(const AffinePerm& a) {
  auto c = code(a);
  return std::accumulate(c.begin(), c.end(), 0LL);
}

std::set<int> right_descents(const AffinePerm& a) {
  int n = a.period();
  std::set<int> d;
  for (int i = 1; i <= n; ++i)
    if (a(i) > a(i + 1)) d.insert(i);
  return d;
}

bool is_grassmannian(const AffinePerm& a) {
  auto c = code(a.inverse());
  return std::is_sorted(c.begin(), c.end());
}

AffinePerm from_code(int n, const std::vector<int>& c) {
  if ((int)c.size() != n) throw std::invalid_argument("code has wrong number of entries");
  for (int x : c)
    if (x < 0) throw std::invalid_argument("code entries must be nonnegative");
  if (std::all_of(c.begin(), c.end(), [](int x) { return x > 0; }))
    throw std::invalid_argument("code must contain a zero entry");
  std::vector<int> cur = c;
  std::vector<int> word;  // letters applied on the right, recorded in reverse
  for (;;) {
    int i = -1;
    for (int k = 1; k <= n; ++k) {
      if (cur[k - 1] > cur[k % n]) { i = k; break; }
    }
    if (i < 0) break;  // no cyclic descent: the vector is constant, hence zero
    // Apply the descent recurrence at i: (..., c_i, c_{i+1}, ...) becomes
    // (..., c_{i+1}, c_i - 1, ...).
    int ci = cur[i - 1];
    cur[i - 1] = cur[i % n];
    cur[i % n] = ci - 1;
    word.push_back(i);
  }
  AffinePerm p = AffinePerm::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = p * AffinePerm::simple(n, *it);
  return p;
}

std::vector<int> shape(const AffinePerm& a) {
  std::vector<int> c = code(a.inverse());
  std::sort(c.begin(), c.end(), std::greater<int>());
  while (!c.empty() && c.back() == 0) c.pop_back();
  // transpose
  std::vector<int> t;
  for (int row = 1; !c.empty() && row <= c[0]; ++row) {
    int cnt = 0;
    for (int x : c)
      if (x >= row) ++cnt;
    t.push_back(cnt);
  }
  return t;
}

AffinePerm star(const AffinePerm& a) {
  // Conjugation by the order-reversing map x -> n+1-x.
  int n = a.period();
  std::vector<long long> w(n);
  for (int x = 1; x <= n; ++x) w[x - 1] = n + 1 - a(n + 1 - x);
  return AffinePerm::from_window(n, w);
}

AffinePerm rotate(const AffinePerm& a) {
  int n = a.period();
  std::vector<long long> w(n);
  for (int x = 1; x <= n; ++x) w[x - 1] = a(x - 1) + 1;
  return AffinePerm::from_window(n, w);
}

long long spread(const AffinePerm& a) {
  long long s = 0;
  for (int i = 1; i <= a.period(); ++i) s = std::max(s, std::llabs(a(i) - i));
  return s;
}

long long delta_count(const AffinePerm& w, long long i, long long j) {
  int n = w.period();
  if (i >= j) throw std::invalid_argument("delta requires i < j");
  if (floor_mod(j - i, n) == 0) throw std::invalid_argument("delta requires j != i (mod n)");
  long long lo = std::min(w(i), w(j)), hi = std::max(w(i), w(j));
  long long cnt = 0;
  for (long long k = i + 1; k < j; ++k) {
    if (floor_mod(k - i, n) == 0) continue;
    long long v = w(k);
    if (lo < v && v < hi) ++cnt;
  }
  return cnt;
}

long long length_after_right_mult(const AffinePerm& w, long long i, long long j) {
  int n = w.period();
  AffinePerm t = AffinePerm::transposition(n, i, j);
  if (w(i) < w(j)) return length(w) + 2 * delta_count(w, i, j) + 1;
  return length(w) - 2 * delta_count(w * t, i, j) - 1;
}

std::vector<std::pair<long long, long long>> inversions(const AffinePerm& a) {
  int n = a.period();
  const auto& w = a.window();
  std::vector<std::pair<long long, long long>> out;
  for (int i = 1; i <= n; ++i) {
    for (int r = 1; r <= n; ++r) {
      long long kmin = floor_div(i - r, n) + 1;
      long long kmax = ceil_div(w[i - 1] - w[r - 1], n) - 1;
      for (long long k = kmin; k <= kmax; ++k) out.emplace_back(i, r + k * n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> project_finite(const AffinePerm& a) {
  int n = a.period();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = (int)residue_1n(a.window()[i], n);
  return w;
}

bool is_reflection(const AffinePerm& a) {
  int n = a.period();
  if (a.is_identity()) return false;
  std::vector<int> moved;
  for (int i = 1; i <= n; ++i)
    if (a(i) != i) moved.push_back(i);
  if (moved.size() != 2) return false;
  long long i = moved[0], j = moved[1];
  return floor_mod(a(i) - j, n) == 0 && a(a(i)) == i && a(a(j)) == j;
}

std::pair<long long, long long> reflection_pair(const AffinePerm& a) {
  if (!is_reflection(a)) throw std::invalid_argument("not a reflection");
  int n = a.period();
  for (int i = 1; i <= n; ++i) {
    if (a(i) > i) return {i, a(i)};
  }
  throw std::logic_error("reflection without an increasing leg");
}

namespace {

std::mutex bruhat_mutex;
std::map<std::tuple<int, std::vector<long long>, std::vector<long long>>, bool> bruhat_cache;

bool bruhat_leq_impl(const AffinePerm& v, const AffinePerm& w, long long lv, long long lw) {
  if (lv > lw) return false;
  if (v.is_identity()) return true;
  if (v == w) return true;
  auto key = std::make_tuple(v.period(), v.window(), w.window());
  {
    std::lock_guard<std::mutex> lock(bruhat_mutex);
    auto it = bruhat_cache.find(key);
    if (it != bruhat_cache.end()) return it->second;
  }
  int i = *right_descents(w).begin();
  AffinePerm s = AffinePerm::simple(w.period(), i);
  AffinePerm ws = w * s;
  bool res;
  if (v(i) > v(i + 1))
    res = bruhat_leq_impl(v * s, ws, lv - 1, lw - 1);
  else
    res = bruhat_leq_impl(v, ws, lv, lw - 1);
  std::lock_guard<std::mutex> lock(bruhat_mutex);
  bruhat_cache[key] = res;
  return res;
}

}  // namespace

bool bruhat_leq(const AffinePerm& v, const AffinePerm& w) {
  if (v.period() != w.period()) throw std::invalid_argument("period mismatch");
  return bruhat_leq_impl(v, w, length(v), length(w));
}

bool bruhat_cover(const AffinePerm& v, const AffinePerm& w) {
  if (length(w) - length(v) != 1) return false;
  return is_reflection(w.inverse() * v);
}

std::vector<std::vector<AffinePerm>> elements_by_length(int n, int maxlen) {
  std::vector<std::vector<AffinePerm>> levels;
  levels.push_back({AffinePerm::identity(n)});
  for (int l = 1; l <= maxlen; ++l) {
    std::set<AffinePerm> next;
    for (const auto& w : levels[l - 1]) {
      for (int i = 1; i <= n; ++i) {
        if (w(i) < w(i + 1)) next.insert(w * AffinePerm::simple(n, i));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

namespace {

struct InvClass {
  long long i, j;  // normalized: i in [n], i < j
  auto operator<=>(const InvClass&) const = default;
};

InvClass normalize_pair(int n, long long a, long long b) {
  long long r = residue_1n(a, n);
  return {r, b - (a - r)};
}

}  // namespace

AffinePerm from_inversion_set(int n, const std::vector<std::pair<long long, long long>>& gens) {
  check_period(n);
  std::set<InvClass> cls;
  for (auto [a, b] : gens) {
    if (a >= b)
      throw std::invalid_argument("condition (1) fails: pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") has i >= j");
    if (floor_mod(b - a, n) == 0)
      throw std::invalid_argument("condition (1) fails: pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") has j = i (mod n)");
    cls.insert(normalize_pair(n, a, b));
  }
  auto contains = [&](long long a, long long b) {
    return a < b && cls.count(normalize_pair(n, a, b)) > 0;
  };
  // Closure conditions on class representatives; condition (2) holds by
  // construction since membership is tested modulo simultaneous shifts.
  for (const auto& x : cls) {
    for (const auto& y : cls) {
      if (floor_mod(x.j - y.i, n) != 0) continue;
      long long c = x.i, d = y.j + (x.j - y.i);
      if (!contains(c, d))
        throw std::invalid_argument(
            "condition (3) fails: (" + std::to_string(x.i) + "," + std::to_string(x.j) +
            ") and (" + std::to_string(y.i) + "," + std::to_string(y.j) + ") need (" +
            std::to_string(c) + "," + std::to_string(d) + ")");
    }
  }
  for (const auto& x : cls) {
    for (long long j = x.i + 1; j < x.j; ++j) {
      if (!contains(x.i, j) && !contains(j, x.j))
        throw std::invalid_argument("condition (4) fails: (" + std::to_string(x.i) + "," +
                                    std::to_string(x.j) + ") with middle " + std::to_string(j));
    }
  }
  // Peel simple descents.
  std::set<InvClass> cur = cls;
  std::vector<long long> word;
  while (!cur.empty()) {
    long long i = -1;
    for (const auto& x : cur) {
      if (x.j == x.i + 1) { i = x.i; break; }
    }
    if (i < 0) throw std::logic_error("inversion closure has no adjacent pair");
    AffinePerm s = AffinePerm::simple(n, i);
    std::set<InvClass> next;
    for (const auto& x : cur) {
      if (x.i == i && x.j == i + 1) continue;
      long long a = s(x.i), b = s(x.j);
      next.insert(normalize_pair(n, a, b));
    }
    word.push_back(i);
    cur = next;
  }
  AffinePerm w = AffinePerm::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = w * AffinePerm::simple(n, *it);
  // The peeled conditions guarantee this, but the contract is exactness.
  std::vector<std::pair<long long, long long>> got = inversions(w);
  std::set<InvClass> gotset;
  for (auto [a, b] : got) gotset.insert(normalize_pair(n, a, b));
  if (gotset != cls) throw std::logic_error("inversion set reconstruction mismatch");
  return w;
}

}  // namespace affine
