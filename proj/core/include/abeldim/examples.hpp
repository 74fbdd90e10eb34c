#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abeldim/lattice.hpp"

namespace abeldim {

// A graph with a distinguished central vertex v0 whose removal leaves the
// listed branches, plus a default Chern class -l' = a_{v0} E_{v0}^*.
struct BuiltinExample {
  std::string name;
  PlumbingGraph graph;
  std::size_t center = 0;
  std::vector<VertexSet> branches;
  EStarCombination lprime;
};

// Two copies of the chain -3, -1, -13, -1, -3 (a -2 leaf on each -1 vertex),
// joined through their -13 vertices to a central vertex of weight -b.
// Default class: -l' = (b - 2) E_{v0}^*, which is the fundamental cycle.
BuiltinExample twin_gamma(std::int64_t b);

enum class StarBranch {
  Gamma,  // the 7-vertex branch of twin_gamma, attached at its -13 vertex
  E237,   // -1 hub with -2, -3, -7 leaves, attached at the hub
};

// Central vertex of weight -b joined to one attachment vertex per branch;
// -l' = n E_{v0}^*. With b = 0 the smallest b making the graph negative
// definite, plus one, is used.
BuiltinExample star(const std::vector<StarBranch>& branches, std::int64_t b, std::int64_t n);

// Graph of a single branch, on its own.
PlumbingGraph branch_graph(StarBranch branch);

}  // namespace abeldim
