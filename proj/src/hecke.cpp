#include "affine/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace affine {

ModuleElement ModuleElement::basis(Variant var, const FpfInvolution& z) {
  ModuleElement e;
  e.var = var;
  e.n = z.period();
  e.terms.emplace(z, LaurentPoly::constant(1));
  return e;
}

LaurentPoly ModuleElement::coeff(const FpfInvolution& z) const {
  auto it = terms.find(z);
  return it == terms.end() ? LaurentPoly() : it->second;
}

void ModuleElement::add(const FpfInvolution& z, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = terms.emplace(z, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (var != o.var || (n != o.n && n != 0 && o.n != 0))
    throw std::invalid_argument("module element mismatch");
  for (const auto& [z, p] : o.terms) add(z, p);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (var != o.var || (n != o.n && n != 0 && o.n != 0))
    throw std::invalid_argument("module element mismatch");
  for (const auto& [z, p] : o.terms) add(z, -p);
  return *this;
}

ModuleElement ModuleElement::scaled(const LaurentPoly& p) const {
  ModuleElement e;
  e.var = var;
  e.n = n;
  if (p.is_zero()) return e;
  for (const auto& [z, q] : terms) e.terms.emplace(z, q * p);
  return e;
}

std::string ModuleElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [z, p] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")*" << (var == Variant::M ? "M" : "N") << z.str();
  }
  return os.str();
}

ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

ModuleElement act(int s, const ModuleElement& e) {
  ModuleElement out;
  out.var = e.var;
  out.n = e.n;
  const LaurentPoly v = LaurentPoly::monomial(1);
  const LaurentPoly vinv = LaurentPoly::monomial(-1);
  const LaurentPoly vmv = v - vinv;
  for (const auto& [z, p] : e.terms) {
    int d = conj_height_delta(z, s);
    if (d > 0) {
      out.add(conj_simple(z, s), p);
    } else if (d == 0) {
      out.add(z, e.var == Variant::M ? v * p : -(vinv * p));
    } else {
      out.add(conj_simple(z, s), p);
      out.add(z, vmv * p);
    }
  }
  return out;
}

namespace {

std::mutex bar_mutex;
std::map<std::pair<Variant, std::vector<long long>>, ModuleElement> bar_cache;

// bar(X_z) along any height-decreasing chain of simple conjugations.
ModuleElement bar_std(Variant var, const FpfInvolution& z) {
  auto key = std::make_pair(var, z.perm().window());
  {
    std::lock_guard<std::mutex> lock(bar_mutex);
    auto it = bar_cache.find(key);
    if (it != bar_cache.end()) return it->second;
  }
  ModuleElement out;
  if (z.height() == 0) {
    out = ModuleElement::basis(var, z);
  } else {
    int s = 0;
    for (int i = 1; i <= z.period(); ++i) {
      if (conj_height_delta(z, i) == -1) {
        s = i;
        break;
      }
    }
    if (s == 0) throw std::logic_error("positive-height element without a descent");
    // X_z = H_s X_y, so bar(X_z) = (H_s - (v - v^{-1})) bar(X_y).
    ModuleElement below = bar_std(var, conj_simple(z, s));
    LaurentPoly vmv = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    out = act(s, below) - below.scaled(vmv);
  }
  std::lock_guard<std::mutex> lock(bar_mutex);
  bar_cache.emplace(key, out);
  return out;
}

}  // namespace

ModuleElement bar(const ModuleElement& e) {
  ModuleElement out;
  out.var = e.var;
  out.n = e.n;
  for (const auto& [z, p] : e.terms) out += bar_std(e.var, z).scaled(p.bar());
  return out;
}

std::vector<ModuleElement> canonical_basis(const Universe& u, Variant var) {
  std::vector<ModuleElement> basis(u.elements.size());
  const LaurentPoly vinv = LaurentPoly::monomial(-1);
  for (int idx = 0; idx < (int)u.elements.size(); ++idx) {
    const FpfInvolution& z = u.elements[idx];
    if (z.height() == 0) {
      basis[idx] = ModuleElement::basis(var, z);
      continue;
    }
    int s = 0;
    for (int i = 1; i <= u.n; ++i) {
      if (conj_height_delta(z, i) == -1) {
        s = i;
        break;
      }
    }
    int ydx = u.index_of(conj_simple(z, s));
    if (ydx < 0) throw std::logic_error("universe is not downward closed");
    // (H_s + v^{-1}) b_y is bar-fixed with unitriangular top term X_z.
    ModuleElement e = act(s, basis[ydx]) + basis[ydx].scaled(vinv);
    // Strip nonnegative exponents below the top, highest heights first.
    for (long long h = z.height() - 1; h >= 0; --h) {
      std::vector<FpfInvolution> level;
      for (const auto& [w, p] : e.terms)
        if (w.height() == h) level.push_back(w);
      for (const FpfInvolution& w : level) {
        const LaurentPoly c = e.coeff(w);
        LaurentPoly q;
        for (const auto& [exp, cc] : c.coeffs()) {
          if (exp == 0) q.add(0, cc);
          if (exp > 0) {
            q.add(exp, cc);
            q.add(-exp, cc);
          }
        }
        if (q.is_zero()) continue;
        int wdx = u.index_of(w);
        if (wdx < 0) throw std::logic_error("correction term missing from universe");
        e -= basis[wdx].scaled(q);
      }
    }
    if (!(e.coeff(z) == LaurentPoly::constant(1)))
      throw std::logic_error("canonical basis element is not unitriangular");
    for (const auto& [w, p] : e.terms)
      if (!(w == z) && !p.strictly_negative())
        throw std::logic_error("canonical basis coefficient has a nonnegative exponent");
    if (!(bar(e) == e)) throw std::logic_error("canonical basis element is not bar-fixed");
    basis[idx] = e;
  }
  return basis;
}

WGraph w_graph(const Universe& u, Variant var, const std::vector<ModuleElement>& basis) {
  WGraph g;
  g.n = u.n;
  g.var = var;
  g.truncated = true;
  int m = (int)u.elements.size();
  g.tau.resize(m);
  for (int x = 0; x < m; ++x) {
    for (int s = 1; s <= u.n; ++s) {
      int d = conj_height_delta(u.elements[x], s);
      bool in_tau = var == Variant::M ? d <= 0 : d >= 0;
      if (in_tau) g.tau[x].push_back(s);
    }
  }
  for (int y = 0; y < m; ++y) {
    for (const auto& [w, p] : basis[y].terms) {
      int x = u.index_of(w);
      if (x == y) continue;
      long long c = p.coeff(-1);
      if (c != 0) g.mu[{x, y}] = c;
    }
  }
  auto mu_of = [&](int x, int y) {
    auto it = g.mu.find({x, y});
    return it == g.mu.end() ? 0LL : it->second;
  };
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      bool subset = std::includes(g.tau[y].begin(), g.tau[y].end(), g.tau[x].begin(),
                                  g.tau[x].end());
      if (subset) continue;
      long long w = mu_of(x, y) + mu_of(y, x);
      if (w != 0) g.omega[{x, y}] = w;
    }
  }
  return g;
}

namespace {

// Tarjan strongly connected components, iterative.
std::vector<std::vector<int>> scc(const std::vector<std::vector<int>>& adj) {
  int m = (int)adj.size();
  std::vector<int> index(m, -1), low(m, 0), on(m, 0), stk;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  struct Frame {
    int v;
    size_t next;
  };
  for (int root = 0; root < m; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stk.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stk.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<int> comp;
          for (;;) {
            int w = stk.back();
            stk.pop_back();
            on[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(comp);
        }
        int done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[done]);
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

std::vector<std::vector<int>> cells(const WGraph& g, int num_vertices) {
  std::vector<std::vector<int>> adj(num_vertices);
  for (const auto& [e, w] : g.omega) adj[e.first].push_back(e.second);
  return scc(adj);
}

std::vector<std::vector<int>> molecules(const WGraph& g, int num_vertices) {
  std::vector<std::vector<int>> adj(num_vertices);
  for (const auto& [e, w] : g.omega) {
    if (g.omega.count({e.second, e.first})) adj[e.first].push_back(e.second);
  }
  // Undirected components over the doubly-directed edges.
  std::vector<int> comp(num_vertices, -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < num_vertices; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v}, members;
    comp[v] = v;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y : adj[x]) {
        if (comp[y] == -1) {
          comp[y] = v;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affine
