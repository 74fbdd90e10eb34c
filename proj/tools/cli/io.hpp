#pragma once

#include <string>

#include <json.hpp>

#include "abeldim/lattice.hpp"

// JSON formats:
//   graph   {"vertices":[{"id":"v1","e":-3},...],"edges":[["v1","v2"],...]}
//   cycle   {"v1": 2, ...}           (missing vertices are 0)
//   l'      {"v0": 1, ...}           meaning -l' = sum a_v E_v^*
namespace abeldim::cli {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Inline JSON when the text starts with '{' or '[', a file path otherwise.
json load_json(const std::string& text_or_path);

GraphSpec parse_graph_spec(const json& j);
Cycle parse_cycle(const PlumbingGraph& G, const json& j);
EStarCombination parse_lprime(const PlumbingGraph& G, const json& j);

ordered_json graph_to_json(const PlumbingGraph& G);
// Vertices in graph order; zero entries are kept.
ordered_json cycle_to_json(const PlumbingGraph& G, const Cycle& c);
// Rationals as "p/q" strings, integers as numbers.
ordered_json qcycle_to_json(const PlumbingGraph& G, const QCycle& c);
ordered_json lprime_to_json(const PlumbingGraph& G, const EStarCombination& lp);
ordered_json rational_to_json(const Rational& r);

}  // namespace abeldim::cli
