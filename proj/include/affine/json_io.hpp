#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "affine/fpf.hpp"
#include "affine/hecke.hpp"
#include "affine/order.hpp"
#include "affine/symfunc.hpp"
#include "affine/transition.hpp"
#include "affine/zlattice.hpp"

namespace affine {

// "[a1,a2,...,an]" with optional whitespace.
std::vector<long long> parse_window(const std::string& text);
// Window form or a cycle list "t(1,6)t(3,8)"; result validated as FPF.
FpfInvolution parse_fpf(const std::string& text, int n_hint = 0);

nlohmann::json window_json(const AffinePerm& p);
nlohmann::json expansion_json(const MonomialExpansion& e);
nlohmann::json universe_json(const Universe& u);
nlohmann::json laurent_json(const LaurentPoly& p);
nlohmann::json canonical_basis_json(const Universe& u, const std::vector<ModuleElement>& basis);
nlohmann::json wgraph_json(const Universe& u, const WGraph& g);
nlohmann::json transition_json(const TransitionReport& rep);
nlohmann::json conjecture_json(const ConjectureReport& rep);

}  // namespace affine
