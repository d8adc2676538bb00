#include "affine/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace affine {

using nlohmann::json;

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

}  // namespace

std::vector<long long> parse_window(const std::string& text) {
  std::string t = strip(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("window must look like \"[a1,a2,...]\"");
  t = t.substr(1, t.size() - 2);
  std::vector<long long> out;
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t comma = t.find(',', pos);
    std::string tok = strip(t.substr(pos, comma == std::string::npos ? comma : comma - pos));
    if (tok.empty()) throw std::invalid_argument("empty window entry");
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad window entry: " + tok);
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

FpfInvolution parse_fpf(const std::string& text, int n_hint) {
  std::string t = strip(text);
  if (!t.empty() && (t[0] == 't' || t[0] == 'T')) {
    // Cycle list t(a,b)t(c,d)...; requires the period as a hint.
    if (n_hint <= 0)
      throw std::invalid_argument("cycle notation needs the period (--n)");
    AffinePerm p = AffinePerm::identity(n_hint);
    size_t pos = 0;
    while (pos < t.size()) {
      if (t[pos] == 't' || t[pos] == 'T') {
        size_t open = t.find('(', pos);
        size_t comma = t.find(',', open);
        size_t close = t.find(')', comma);
        if (open == std::string::npos || comma == std::string::npos ||
            close == std::string::npos)
          throw std::invalid_argument("bad cycle token in: " + t);
        long long a = std::stoll(strip(t.substr(open + 1, comma - open - 1)));
        long long b = std::stoll(strip(t.substr(comma + 1, close - comma - 1)));
        p = p * AffinePerm::transposition(n_hint, std::min(a, b), std::max(a, b));
        pos = close + 1;
      } else if (std::isspace((unsigned char)t[pos]) || t[pos] == '*') {
        ++pos;
      } else {
        throw std::invalid_argument("bad cycle list: " + t);
      }
    }
    return FpfInvolution::from_perm(p);
  }
  std::vector<long long> w = parse_window(t);
  return FpfInvolution::from_window((int)w.size(), w);
}

json window_json(const AffinePerm& p) { return json(p.window()); }

json expansion_json(const MonomialExpansion& e) {
  json terms = json::array();
  // Lexicographically descending partitions.
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it)
    terms.push_back({{"partition", it->first}, {"coeff", it->second}});
  return {{"n", e.n}, {"degree", e.degree}, {"basis", "m"}, {"terms", terms}};
}

json universe_json(const Universe& u) {
  json elements = json::array();
  for (const auto& z : u.elements) elements.push_back(z.perm().window());
  json covers = json::array();
  for (int zi = 0; zi < (int)u.down.size(); ++zi)
    for (const auto& e : u.down[zi])
      covers.push_back({zi, {e.i, e.j}, e.target});
  return {{"n", u.n},
          {"sign", u.sign > 0 ? "+" : "-"},
          {"Lmax", u.lmax},
          {"elements", elements},
          {"covers", covers}};
}

json laurent_json(const LaurentPoly& p) {
  json obj = json::object();
  for (const auto& [e, c] : p.coeffs()) obj[std::to_string(e)] = c;
  return obj;
}

json canonical_basis_json(const Universe& u, const std::vector<ModuleElement>& basis) {
  json out = json::array();
  for (size_t i = 0; i < basis.size(); ++i) {
    json terms = json::array();
    for (const auto& [w, p] : basis[i].terms)
      terms.push_back({{"w", w.perm().window()}, {"poly", laurent_json(p)}});
    out.push_back({{"z", u.elements[i].perm().window()}, {"terms", terms}});
  }
  return out;
}

json wgraph_json(const Universe& u, const WGraph& g) {
  json taus = json::array();
  for (size_t i = 0; i < g.tau.size(); ++i)
    taus.push_back({{"z", u.elements[i].perm().window()}, {"tau", g.tau[i]}});
  json edges = json::array();
  for (const auto& [e, w] : g.omega) edges.push_back({e.first, e.second, w});
  return {{"n", g.n},
          {"variant", g.var == Variant::M ? "m" : "n"},
          {"truncated", g.truncated},
          {"vertices", taus},
          {"edges", edges}};
}

json transition_json(const TransitionReport& rep) {
  json lower = json::array(), upper = json::array();
  for (const auto& z : rep.lower) lower.push_back(z.perm().window());
  for (const auto& z : rep.upper) upper.push_back(z.perm().window());
  return {{"y", rep.y.perm().window()},
          {"p", rep.p},
          {"q", rep.q},
          {"lower", lower},
          {"upper", upper},
          {"lower_sum", expansion_json(rep.lower_sum)},
          {"upper_sum", expansion_json(rep.upper_sum)},
          {"equal", rep.equal}};
}

json conjecture_json(const ConjectureReport& rep) {
  json degs = json::array();
  for (const auto& d : rep.degrees) {
    degs.push_back({{"n", rep.n},
                    {"degree", d.degree},
                    {"rank", d.rank},
                    {"rank_finite", d.rank_finite},
                    {"truncation", {{"n", rep.n}, {"Lmax", d.degree}, {"degree", d.degree}}},
                    {"saturated", d.saturated},
                    {"positive_basis",
                     {{"found", d.positive_basis_found},
                      {"subsets_tried", d.subsets_tried},
                      {"exhaustive", d.search_exhaustive}}},
                    {"verdict", "consistent"}});
  }
  return {{"n", rep.n},
          {"dmax", rep.dmax},
          {"degrees", degs},
          {"omega_plus_invariance",
           {{"truncation", {{"n", rep.n}, {"Lmax", rep.dmax}, {"degree", rep.dmax}}},
            {"checked", rep.invariance_checked},
            {"verdict", rep.verdict},
            {"witness", rep.invariance_witness}}},
          {"note", "evidence, not proof"}};
}

}  // namespace affine
