#pragma once

// Independent reference implementations for tests. Everything here is
// written from the definitions, by plain enumeration, and uses the library
// only for graph access (ids, e_v, edges) and the E* basis.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "abeldim/error.hpp"
#include "abeldim/lattice.hpp"

namespace oracle {

using abeldim::Cycle;
using abeldim::EStarCombination;
using abeldim::PlumbingGraph;

inline std::int64_t chi(const PlumbingGraph& G, const std::vector<std::int64_t>& l) {
  std::int64_t twice = 0;
  for (std::size_t v = 0; v < G.size(); ++v) {
    const auto e = G.self_intersection(v);
    twice += -e * l[v] * l[v] + (e + 2) * l[v];
  }
  std::int64_t cross = 0;
  for (auto [v, w] : G.edges()) cross += l[v] * l[w];
  return twice / 2 - cross;
}

inline std::int64_t pairing(const PlumbingGraph& G, const std::vector<std::int64_t>& x,
                            const std::vector<std::int64_t>& y) {
  std::int64_t s = 0;
  for (std::size_t v = 0; v < G.size(); ++v) s += G.self_intersection(v) * x[v] * y[v];
  for (auto [v, w] : G.edges()) s += x[v] * y[w] + x[w] * y[v];
  return s;
}

// Calls f on every integer point of [lo, hi], last coordinate fastest.
inline void for_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                    const std::function<void(const std::vector<std::int64_t>&)>& f) {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return;
  std::vector<std::int64_t> x = lo;
  for (;;) {
    f(x);
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return;
    }
    if (x.empty()) return;
  }
}

// Connected components of the subgraph induced on {v : mask[v]}, by union-find.
inline std::vector<std::vector<std::size_t>> components(const PlumbingGraph& G, const std::vector<bool>& mask) {
  std::vector<std::size_t> parent(G.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  for (auto [v, w] : G.edges())
    if (mask[v] && mask[w]) parent[root(v)] = root(w);
  std::vector<std::vector<std::size_t>> out;
  std::vector<long> slot(G.size(), -1);
  for (std::size_t v = 0; v < G.size(); ++v) {
    if (!mask[v]) continue;
    auto r = root(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(v);
  }
  return out;
}

// Generic h^1 of Z': sum over components C of |Z'| of 1 - min chi on [E_C, Z'|_C].
inline std::int64_t h1(const PlumbingGraph& G, const std::vector<std::int64_t>& z) {
  std::vector<bool> mask(G.size());
  for (std::size_t v = 0; v < G.size(); ++v) mask[v] = z[v] > 0;
  std::int64_t total = 0;
  for (const auto& C : components(G, mask)) {
    std::vector<std::int64_t> lo(G.size(), 0), hi(G.size(), 0);
    for (auto v : C) {
      lo[v] = 1;
      hi[v] = z[v];
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for_box(lo, hi, [&](const std::vector<std::int64_t>& l) { best = std::min(best, chi(G, l)); });
    total += 1 - best;
  }
  return total;
}

inline std::int64_t lp_pair(const EStarCombination& lp, const std::vector<std::int64_t>& z) {
  std::int64_t s = 0;
  for (std::size_t v = 0; v < z.size(); ++v) s += lp.a[v] * z[v];
  return s;
}

struct DimCodim {
  std::int64_t d = 0;
  std::int64_t codim = 0;
};

// d = min over 0 <= Z1 <= Z of (l', Z1) + h1(Z) - h1(Z1); codim = h1(Z) - d.
inline DimCodim dim(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp) {
  const auto hz = h1(G, Z.coeffs());
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for_box(std::vector<std::int64_t>(G.size(), 0), Z.coeffs(),
          [&](const std::vector<std::int64_t>& z) { best = std::min(best, lp_pair(lp, z) + hz - h1(G, z)); });
  return {best, hz - best};
}

// chi(-l' + l) > chi(-l') for every 0 < l <= Z, i.e. chi(l) + (l', l) > 0.
inline bool dominant(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp) {
  bool ok = true;
  for_box(std::vector<std::int64_t>(G.size(), 0), Z.coeffs(), [&](const std::vector<std::int64_t>& l) {
    bool zero = std::all_of(l.begin(), l.end(), [](auto x) { return x == 0; });
    if (!zero && chi(G, l) + lp_pair(lp, l) <= 0) ok = false;
  });
  return ok;
}

// Smallest nonzero effective cycle with (Z, E_v) <= 0 for all v, by
// exhaustive search in [0, bound] (ordered by total, then lexicographically).
inline std::vector<std::int64_t> minimal_antinef(const PlumbingGraph& G, std::int64_t bound) {
  std::vector<std::int64_t> best;
  for_box(std::vector<std::int64_t>(G.size(), 0), std::vector<std::int64_t>(G.size(), bound),
          [&](const std::vector<std::int64_t>& z) {
            if (std::all_of(z.begin(), z.end(), [](auto x) { return x == 0; })) return;
            for (std::size_t v = 0; v < G.size(); ++v) {
              std::vector<std::int64_t> ev(G.size(), 0);
              ev[v] = 1;
              if (pairing(G, z, ev) > 0) return;
            }
            if (best.empty()) {
              best = z;
            } else {
              for (std::size_t v = 0; v < z.size(); ++v) best[v] = std::min(best[v], z[v]);
            }
          });
  return best;
}

struct Instance {
  PlumbingGraph G;
  Cycle Z;
  EStarCombination lp;
  std::string label;
};

inline std::string describe(const Instance& in) {
  std::string s = in.label + " e=[";
  for (std::size_t v = 0; v < in.G.size(); ++v) s += (v ? "," : "") + std::to_string(in.G.self_intersection(v));
  s += "] edges=[";
  for (auto [v, w] : in.G.edges()) s += std::to_string(v) + "-" + std::to_string(w) + " ";
  s += "] Z=[";
  for (std::size_t v = 0; v < in.G.size(); ++v) s += (v ? "," : "") + std::to_string(in.Z[v]);
  s += "] a=[";
  for (std::size_t v = 0; v < in.G.size(); ++v) s += (v ? "," : "") + std::to_string(in.lp.a[v]);
  return s + "]";
}

// Z with E <= Z and Z_v <= max(1, ceil(Z_K)_v + 2); l' with sum a_v <= 3.
inline void decorate(std::mt19937_64& rng, Instance& in) {
  const auto& G = in.G;
  const auto zk = abeldim::ceil_to_cycle(abeldim::canonical_cycle(G));
  std::vector<std::int64_t> z(G.size());
  for (std::size_t v = 0; v < G.size(); ++v) {
    const auto hi = std::max<std::int64_t>(1, zk[v] + 2);
    z[v] = std::uniform_int_distribution<std::int64_t>(1, hi)(rng);
  }
  in.Z = Cycle(z);
  in.lp.a.assign(G.size(), 0);
  const auto total = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < total; ++i) in.lp.a[std::uniform_int_distribution<std::size_t>(0, G.size() - 1)(rng)] += 1;
}

// A random tree on at most max_n vertices with e_v in [-5, -1], drawn again
// until negative definite.
inline PlumbingGraph random_tree(std::mt19937_64& rng, std::size_t max_n = 5) {
  for (;;) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    abeldim::GraphSpec spec;
    for (std::size_t i = 0; i < n; ++i)
      spec.vertices.push_back({"v" + std::to_string(i), std::uniform_int_distribution<std::int64_t>(-5, -1)(rng)});
    for (std::size_t i = 1; i < n; ++i)
      spec.edges.emplace_back("v" + std::to_string(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)),
                              "v" + std::to_string(i));
    try {
      return abeldim::build_graph(spec);
    } catch (const abeldim::Error&) {
    }
  }
}

// A star with a -1 or -2 center and 3 or 4 legs in [-5, -2]; mostly
// non-rational once definite.
inline PlumbingGraph random_star(std::mt19937_64& rng) {
  for (;;) {
    abeldim::GraphSpec spec;
    spec.vertices.push_back({"c", std::uniform_int_distribution<std::int64_t>(-2, -1)(rng)});
    const auto legs = std::uniform_int_distribution<int>(3, 4)(rng);
    for (int i = 0; i < legs; ++i) {
      spec.vertices.push_back({"x" + std::to_string(i), std::uniform_int_distribution<std::int64_t>(-5, -2)(rng)});
      spec.edges.emplace_back("c", "x" + std::to_string(i));
    }
    try {
      return abeldim::build_graph(spec);
    } catch (const abeldim::Error&) {
    }
  }
}

// The test corpus: `random` random trees followed by `stars` random stars.
inline std::vector<Instance> corpus(std::uint64_t seed, std::size_t random, std::size_t stars) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < random + stars; ++i) {
    Instance in;
    in.G = i < random ? random_tree(rng) : random_star(rng);
    in.label = (i < random ? "tree#" : "star#") + std::to_string(i);
    decorate(rng, in);
    out.push_back(std::move(in));
  }
  return out;
}

}  // namespace oracle
