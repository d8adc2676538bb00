#include "affine/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace affine {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool in_par_n(const Partition& p, int n) {
  return is_partition(p) && (p.empty() || p[0] <= n - 1);
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int row = 1; row <= p[0]; ++row) {
    int cnt = 0;
    for (int x : p)
      if (x >= row) ++cnt;
    t.push_back(cnt);
  }
  return t;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (weight(a) != weight(b)) throw std::invalid_argument("dominance requires equal weights");
  int pa = 0, pb = 0;
  size_t m = std::max(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    pa += i < a.size() ? a[i] : 0;
    pb += i < b.size() ? b[i] : 0;
    if (pa > pb) return false;
  }
  return true;
}

namespace {

void gen(int rest, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen(rest - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d, int max_part) {
  std::vector<Partition> out;
  if (d < 0) return out;
  Partition cur;
  gen(d, max_part, cur, out);  // recursion emits descending lexicographic order
  return out;
}

}  // namespace affine
