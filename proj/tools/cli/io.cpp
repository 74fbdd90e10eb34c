#include "io.hpp"

#include <fstream>
#include <sstream>

#include "abeldim/error.hpp"

namespace abeldim::cli {

json load_json(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    text = text_or_path;
  } else {
    std::ifstream in(text_or_path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + text_or_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

namespace {

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(ErrorCode::ParseError, what + " must be an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) fail(ErrorCode::ParseError, what + " must be a string");
  return j.get<std::string>();
}

std::vector<std::int64_t> parse_vertex_map(const PlumbingGraph& G, const json& j, const std::string& what) {
  if (!j.is_object()) fail(ErrorCode::ParseError, what + " must be an object keyed by vertex id");
  std::vector<std::int64_t> out(G.size(), 0);
  for (const auto& [key, value] : j.items()) out[G.index_of(key)] = as_int(value, what + " entry " + key);
  return out;
}

}  // namespace

GraphSpec parse_graph_spec(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) fail(ErrorCode::ParseError, "graph needs a \"vertices\" array");
  const auto& vs = j.at("vertices");
  if (!vs.is_array()) fail(ErrorCode::ParseError, "\"vertices\" must be an array");
  GraphSpec spec;
  for (const auto& v : vs) {
    if (!v.is_object() || !v.contains("id") || !v.contains("e"))
      fail(ErrorCode::ParseError, "each vertex needs \"id\" and \"e\"");
    spec.vertices.push_back({as_string(v.at("id"), "vertex id"), as_int(v.at("e"), "self-intersection")});
  }
  if (j.contains("edges")) {
    const auto& es = j.at("edges");
    if (!es.is_array()) fail(ErrorCode::ParseError, "\"edges\" must be an array");
    for (const auto& e : es) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "each edge is a pair of vertex ids");
      spec.edges.emplace_back(as_string(e[0], "edge end"), as_string(e[1], "edge end"));
    }
  }
  return spec;
}

Cycle parse_cycle(const PlumbingGraph& G, const json& j) { return Cycle(parse_vertex_map(G, j, "cycle")); }

EStarCombination parse_lprime(const PlumbingGraph& G, const json& j) {
  EStarCombination lp{parse_vertex_map(G, j, "l'")};
  validate(G, lp);
  return lp;
}

ordered_json graph_to_json(const PlumbingGraph& G) {
  ordered_json vs = ordered_json::array();
  for (std::size_t v = 0; v < G.size(); ++v) vs.push_back({{"id", G.id(v)}, {"e", G.self_intersection(v)}});
  ordered_json es = ordered_json::array();
  for (auto [v, w] : G.edges()) es.push_back({G.id(v), G.id(w)});
  return {{"vertices", vs}, {"edges", es}};
}

ordered_json cycle_to_json(const PlumbingGraph& G, const Cycle& c) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < G.size(); ++v) out[G.id(v)] = c[v];
  return out;
}

ordered_json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) return static_cast<std::int64_t>(numerator(r));
  return r.str();
}

ordered_json qcycle_to_json(const PlumbingGraph& G, const QCycle& c) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < G.size(); ++v) out[G.id(v)] = rational_to_json(c[v]);
  return out;
}

ordered_json lprime_to_json(const PlumbingGraph& G, const EStarCombination& lp) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < G.size(); ++v)
    if (lp.a[v] != 0) out[G.id(v)] = lp.a[v];
  return out;
}

}  // namespace abeldim::cli
