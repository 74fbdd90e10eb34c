#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "abeldim/generic_invariants.hpp"
#include "abeldim/lattice.hpp"
#include "abeldim/limits.hpp"

namespace abeldim {

// Layout of an s-tuple: one block of a_v entries per vertex with a_v > 0,
// blocks ordered by vertex index. Entries of a block are s_{v,1..a_v}.
class IndexShape {
 public:
  IndexShape() = default;
  // counts[v] = a_v; vertices with a_v = 0 get no block.
  explicit IndexShape(const std::vector<std::int64_t>& counts);

  std::size_t blocks() const noexcept { return vertex_.size(); }
  std::size_t entries() const noexcept { return begin_.empty() ? 0 : begin_.back(); }
  std::size_t block_vertex(std::size_t b) const { return vertex_[b]; }
  std::size_t block_begin(std::size_t b) const { return begin_[b]; }
  std::size_t block_end(std::size_t b) const { return begin_[b + 1]; }
  std::size_t block_size(std::size_t b) const { return begin_[b + 1] - begin_[b]; }
  // Block owning an entry.
  std::size_t block_of(std::size_t entry) const;

 private:
  std::vector<std::size_t> vertex_;
  std::vector<std::size_t> begin_{0};
};

// Values s_{v,k} laid out by an IndexShape.
using MultiIndex = std::vector<std::int64_t>;

// Sorts every block ascending (the k-indices of one vertex are symmetric).
MultiIndex canonical(const IndexShape& shape, MultiIndex s);
std::int64_t norm(const MultiIndex& s);
// Per-block minimum; blocks are never empty.
std::vector<std::int64_t> block_minima(const IndexShape& shape, const MultiIndex& s);

// An oracle s -> tau_s, meant to bound d_s from above, defined on the grid
// 0 <= s <= bound (bound given per block). Calls clamp s to the grid,
// canonicalize, and are memoized; the cache is shared by copies. When the
// function depends on block minima only, every block is flattened to its
// minimum before the oracle sees it.
class TestFunction {
 public:
  using Oracle = std::function<std::int64_t(const MultiIndex&)>;

  TestFunction(std::string name, IndexShape shape, std::vector<std::int64_t> bound, Oracle oracle,
               bool depends_on_min_only);

  const std::string& name() const noexcept { return name_; }
  const IndexShape& shape() const noexcept { return shape_; }
  const std::vector<std::int64_t>& bound() const noexcept { return bound_; }
  bool depends_on_min_only() const noexcept { return min_only_; }

  // The upper corner of the grid.
  MultiIndex top() const;
  MultiIndex clamp(MultiIndex s) const;

  std::int64_t operator()(const MultiIndex& s) const;
  std::size_t evaluations() const;

 private:
  struct Cache;

  std::string name_;
  IndexShape shape_;
  std::vector<std::int64_t> bound_;
  Oracle oracle_;
  bool min_only_ = false;
  std::shared_ptr<Cache> cache_;
};

// m_v = E_v-coefficient of max(0, floor(Z_K)).
std::vector<std::int64_t> stabilization_bound(const PlumbingGraph& G, const EStarCombination& lp);

struct TowerState {
  PlumbingGraph graph;
  Cycle Z;                   // pullback of Z
  EStarCombination lprime;   // -l'_s = sum of F^*_{v,k,s_{v,k}}
  VertexSet I;               // E*-support of l'_s
  MultiIndex s;              // after clamping
  // pullback[u] = pi_s^* E_u for each vertex u of the base graph
  std::vector<Cycle> pullback;
};

// Hangs a chain (-2)^{s-1}(-1) at v for each entry s_{v,k} >= 1; entries
// above m_v are clamped first. New vertices are named "F(<id>,<k>,<t>)".
TowerState build_tower(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const MultiIndex& s);

// min{ sum_v (min_k s_{v,k}) E_v, Z } where the inner minimum over an empty
// block (a_v = 0) is taken as +infinity, i.e. the coefficient is Z_v.
Cycle l_s_cycle(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const MultiIndex& s);

IndexShape shape_of(const EStarCombination& lp);

// s -> e_s = h1(Z_s) - h1(Z_s restricted off I_s) on the tower, grid bound m.
TestFunction test_first(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp);

// s -> h1(Z) - h1(l_s); grid bound Z_v on the block of v, where l_s = Z.
TestFunction test_second(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp);

struct DimensionTable {
  std::string provenance;  // name of the test function
  std::vector<std::int64_t> bound;
  std::map<MultiIndex, std::int64_t> d;  // keyed by canonical s

  std::int64_t at(const IndexShape& shape, const MultiIndex& s) const;
};

// Decreasing induction over the canonical grid. At s the unsaturated
// successors s^{v,k} are looked up; if their values differ, d_s is the max,
// otherwise d_s = d when tau_s = d and d + 1 when not. The top corner gets
// closed_form_min. Throws InconsistentOracle when successor values differ
// by more than one or tau_s < common successor value; GridTooLarge past the
// configured cap.
DimensionTable run_pattern_induction(const TestFunction& tau, const Limits& limits = default_limits());

// min over s <= t <= bound (full tuples, not just canonical ones) of
// |t - s| + tau_t.
std::int64_t closed_form_min(const TestFunction& tau, const MultiIndex& s, const Limits& limits = default_limits());

// Which L_0-side h^1 to use in twisted_d.
enum class TwistOracle {
  GenericBundle,  // h1(Z1) = -min_{0<=l<=Z1}(chi(l) + (l'_0, l)); needs dominance of l'_0 on Z
  GenericImage,   // h1(Z1) = max_{Z2 <= Z1}(h1(O_{Z2}) - (l'_0, Z2))
};

struct TwistedResult {
  std::int64_t d = 0;
  std::int64_t codim = 0;
  Cycle witness;
};

TwistedResult twisted_d(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                        const EStarCombination& lp0, TwistOracle oracle, const Limits& limits = default_limits());
// With an arbitrary h^1(., L_0) evaluator.
TwistedResult twisted_d(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const H1Function& h1_L0,
                        const Limits& limits = default_limits());

}  // namespace abeldim
