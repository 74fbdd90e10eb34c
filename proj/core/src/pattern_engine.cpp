#include "abeldim/pattern_engine.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "abeldim/error.hpp"
#include "box_iter.hpp"
#include "tables.hpp"

namespace abeldim {

IndexShape::IndexShape(const std::vector<std::int64_t>& counts) {
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] < 0) fail(ErrorCode::InvalidArgument, "negative block size");
    if (counts[v] == 0) continue;
    vertex_.push_back(v);
    begin_.push_back(begin_.back() + static_cast<std::size_t>(counts[v]));
  }
}

std::size_t IndexShape::block_of(std::size_t entry) const {
  auto it = std::upper_bound(begin_.begin(), begin_.end(), entry);
  return static_cast<std::size_t>(it - begin_.begin()) - 1;
}

MultiIndex canonical(const IndexShape& shape, MultiIndex s) {
  if (s.size() != shape.entries()) fail(ErrorCode::VertexMismatch, "multi-index does not match its shape");
  for (std::size_t b = 0; b < shape.blocks(); ++b)
    std::sort(s.begin() + static_cast<std::ptrdiff_t>(shape.block_begin(b)),
              s.begin() + static_cast<std::ptrdiff_t>(shape.block_end(b)));
  return s;
}

std::int64_t norm(const MultiIndex& s) { return std::accumulate(s.begin(), s.end(), std::int64_t{0}); }

std::vector<std::int64_t> block_minima(const IndexShape& shape, const MultiIndex& s) {
  std::vector<std::int64_t> mins(shape.blocks());
  for (std::size_t b = 0; b < shape.blocks(); ++b)
    mins[b] = *std::min_element(s.begin() + static_cast<std::ptrdiff_t>(shape.block_begin(b)),
                                s.begin() + static_cast<std::ptrdiff_t>(shape.block_end(b)));
  return mins;
}

// ---------------------------------------------------------------------------

struct TestFunction::Cache {
  std::mutex mutex;
  std::unordered_map<MultiIndex, std::int64_t, boost::hash<MultiIndex>> values;
};

TestFunction::TestFunction(std::string name, IndexShape shape, std::vector<std::int64_t> bound, Oracle oracle,
                           bool depends_on_min_only)
    : name_(std::move(name)),
      shape_(std::move(shape)),
      bound_(std::move(bound)),
      oracle_(std::move(oracle)),
      min_only_(depends_on_min_only),
      cache_(std::make_shared<Cache>()) {
  if (bound_.size() != shape_.blocks()) fail(ErrorCode::InvalidArgument, "one bound per block expected");
  for (auto m : bound_)
    if (m < 0) fail(ErrorCode::InvalidArgument, "negative grid bound");
}

MultiIndex TestFunction::top() const {
  MultiIndex s(shape_.entries());
  for (std::size_t b = 0; b < shape_.blocks(); ++b)
    for (std::size_t i = shape_.block_begin(b); i < shape_.block_end(b); ++i) s[i] = bound_[b];
  return s;
}

MultiIndex TestFunction::clamp(MultiIndex s) const {
  if (s.size() != shape_.entries()) fail(ErrorCode::VertexMismatch, "multi-index does not match its shape");
  for (std::size_t b = 0; b < shape_.blocks(); ++b) {
    for (std::size_t i = shape_.block_begin(b); i < shape_.block_end(b); ++i) {
      if (s[i] < 0) fail(ErrorCode::SOutOfRange, "negative entry in multi-index");
      s[i] = std::min(s[i], bound_[b]);
    }
  }
  return s;
}

std::int64_t TestFunction::operator()(const MultiIndex& s) const {
  MultiIndex key = canonical(shape_, clamp(s));
  if (min_only_) {
    for (std::size_t b = 0; b < shape_.blocks(); ++b)
      std::fill(key.begin() + static_cast<std::ptrdiff_t>(shape_.block_begin(b)),
                key.begin() + static_cast<std::ptrdiff_t>(shape_.block_end(b)), key[shape_.block_begin(b)]);
  }
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  const auto value = oracle_(key);
  std::lock_guard lock(cache_->mutex);
  cache_->values.emplace(std::move(key), value);
  return value;
}

std::size_t TestFunction::evaluations() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->values.size();
}

// ---------------------------------------------------------------------------

std::vector<std::int64_t> stabilization_bound(const PlumbingGraph& G, const EStarCombination& lp) {
  validate(G, lp);
  const Cycle fl = floor_to_cycle(canonical_cycle(G));
  std::vector<std::int64_t> m(G.size());
  for (std::size_t v = 0; v < G.size(); ++v) m[v] = std::max<std::int64_t>(0, fl[v]);
  return m;
}

IndexShape shape_of(const EStarCombination& lp) { return IndexShape(lp.a); }

TowerState build_tower(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const MultiIndex& s_in) {
  require_at_least_reduced(G, Z);
  validate(G, lp);
  const IndexShape shape = shape_of(lp);
  if (s_in.size() != shape.entries()) fail(ErrorCode::VertexMismatch, "multi-index does not match l'");
  const auto m = stabilization_bound(G, lp);

  TowerState t;
  t.s = s_in;
  GraphSpec spec = G.spec();
  std::vector<std::int64_t> zc = Z.coeffs();
  std::vector<std::size_t> chain_root;  // base vertex of each new vertex
  std::vector<std::size_t> ends;        // vertex carrying F^* for each entry (index into spec)

  for (std::size_t b = 0; b < shape.blocks(); ++b) {
    const std::size_t v = shape.block_vertex(b);
    for (std::size_t i = shape.block_begin(b); i < shape.block_end(b); ++i) {
      if (t.s[i] < 0) fail(ErrorCode::SOutOfRange, "negative entry in multi-index");
      t.s[i] = std::min(t.s[i], m[v]);
      const std::size_t k = i - shape.block_begin(b) + 1;
      std::string prev = G.id(v);
      if (t.s[i] >= 1) spec.vertices[v].e -= 1;
      for (std::int64_t step = 1; step <= t.s[i]; ++step) {
        std::string id = "F(" + G.id(v) + "," + std::to_string(k) + "," + std::to_string(step) + ")";
        spec.vertices.push_back({id, step == t.s[i] ? -1 : -2});
        spec.edges.emplace_back(prev, id);
        zc.push_back(Z[v]);
        chain_root.push_back(v);
        prev = std::move(id);
      }
      ends.push_back(t.s[i] >= 1 ? spec.vertices.size() - 1 : v);
    }
  }

  t.graph = build_graph_unchecked(spec);
  const std::size_t N = t.graph.size();
  t.Z = Cycle(std::move(zc));
  t.lprime.a.assign(N, 0);
  for (auto e : ends) t.lprime.a[e] += 1;
  t.I = estar_support(t.lprime);
  for (std::size_t u = 0; u < G.size(); ++u) t.pullback.push_back(Cycle::basis(N, u));
  for (std::size_t x = G.size(); x < N; ++x) t.pullback[chain_root[x - G.size()]][x] = 1;
  return t;
}

Cycle l_s_cycle(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const MultiIndex& s) {
  validate(G, lp);
  if (Z.size() != G.size()) fail(ErrorCode::VertexMismatch, "cycle does not match the graph");
  const IndexShape shape = shape_of(lp);
  if (s.size() != shape.entries()) fail(ErrorCode::VertexMismatch, "multi-index does not match l'");
  Cycle l = Z;
  const auto mins = block_minima(shape, s);
  for (std::size_t b = 0; b < shape.blocks(); ++b) {
    if (mins[b] < 0) fail(ErrorCode::SOutOfRange, "negative entry in multi-index");
    const auto v = shape.block_vertex(b);
    l[v] = std::min(mins[b], Z[v]);
  }
  return l;
}

TestFunction test_first(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp) {
  require_at_least_reduced(G, Z);
  const IndexShape shape = shape_of(lp);
  const auto m = stabilization_bound(G, lp);
  std::vector<std::int64_t> bound;
  for (std::size_t b = 0; b < shape.blocks(); ++b) bound.push_back(m[shape.block_vertex(b)]);
  auto oracle = [G, Z, lp](const MultiIndex& s) {
    const auto t = build_tower(G, Z, lp, s);
    return h1_generic(t.graph, t.Z) - h1_generic(t.graph, restrict(t.Z, complement(t.graph.size(), t.I)));
  };
  return TestFunction("first", shape, std::move(bound), oracle, false);
}

TestFunction test_second(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp) {
  require_at_least_reduced(G, Z);
  const IndexShape shape = shape_of(lp);
  std::vector<std::int64_t> bound;
  for (std::size_t b = 0; b < shape.blocks(); ++b) bound.push_back(Z[shape.block_vertex(b)]);
  const std::int64_t h1Z = h1_generic(G, Z);
  auto oracle = [G, Z, lp, h1Z](const MultiIndex& s) { return h1Z - h1_generic(G, l_s_cycle(G, Z, lp, s)); };
  return TestFunction("second", shape, std::move(bound), oracle, true);
}

// ---------------------------------------------------------------------------

std::int64_t DimensionTable::at(const IndexShape& shape, const MultiIndex& s) const {
  MultiIndex key = s;
  if (key.size() != shape.entries()) fail(ErrorCode::VertexMismatch, "multi-index does not match its shape");
  for (std::size_t b = 0; b < shape.blocks(); ++b)
    for (std::size_t i = shape.block_begin(b); i < shape.block_end(b); ++i) key[i] = std::min(key[i], bound[b]);
  auto it = d.find(canonical(shape, std::move(key)));
  if (it == d.end()) fail(ErrorCode::SOutOfRange, "multi-index outside the table");
  return it->second;
}

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// All ascending tuples of length len with entries in [0, hi].
void ascending_tuples(std::size_t len, std::int64_t hi, std::vector<std::vector<std::int64_t>>& out) {
  std::vector<std::int64_t> cur(len, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == hi) --i;
    if (i == 0) return;
    const auto v = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < len; ++j) cur[j] = v;
  }
}

}  // namespace

DimensionTable run_pattern_induction(const TestFunction& tau, const Limits& limits) {
  const IndexShape& shape = tau.shape();
  const auto& bound = tau.bound();

  std::uint64_t total = 1;
  for (std::size_t b = 0; b < shape.blocks(); ++b) {
    total *= binomial_capped(static_cast<std::uint64_t>(bound[b]) + shape.block_size(b), shape.block_size(b),
                             limits.max_grid_points);
    if (total > limits.max_grid_points)
      fail(ErrorCode::GridTooLarge, "canonical grid exceeds " + std::to_string(limits.max_grid_points) + " points");
  }

  // Cartesian product of per-block ascending tuples.
  std::vector<std::vector<std::vector<std::int64_t>>> per_block(shape.blocks());
  for (std::size_t b = 0; b < shape.blocks(); ++b) ascending_tuples(shape.block_size(b), bound[b], per_block[b]);
  std::vector<MultiIndex> grid;
  grid.reserve(total);
  std::vector<std::size_t> pick(shape.blocks(), 0);
  for (;;) {
    MultiIndex s;
    s.reserve(shape.entries());
    for (std::size_t b = 0; b < shape.blocks(); ++b) s.insert(s.end(), per_block[b][pick[b]].begin(), per_block[b][pick[b]].end());
    grid.push_back(std::move(s));
    std::size_t b = 0;
    while (b < shape.blocks() && ++pick[b] == per_block[b].size()) pick[b++] = 0;
    if (b == shape.blocks()) break;
  }
  std::stable_sort(grid.begin(), grid.end(), [](const MultiIndex& x, const MultiIndex& y) { return norm(x) > norm(y); });

  DimensionTable table;
  table.provenance = tau.name();
  table.bound = bound;
  for (const auto& s : grid) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    bool any = false;
    for (std::size_t b = 0; b < shape.blocks(); ++b) {
      for (std::size_t i = shape.block_begin(b); i < shape.block_end(b); ++i) {
        if (s[i] >= bound[b]) continue;
        if (i + 1 < shape.block_end(b) && s[i + 1] == s[i]) continue;  // same successor as the last of the run
        MultiIndex t = s;
        ++t[i];
        const auto dv = table.d.at(t);
        lo = std::min(lo, dv);
        hi = std::max(hi, dv);
        any = true;
      }
    }
    std::int64_t value;
    if (!any) {
      value = closed_form_min(tau, s, limits);
    } else if (hi - lo > 1) {
      fail(ErrorCode::InconsistentOracle, "successor values differ by " + std::to_string(hi - lo));
    } else if (hi != lo) {
      value = hi;
    } else {
      const auto t = tau(s);
      if (t < lo) fail(ErrorCode::InconsistentOracle, "test function below the successor value");
      value = t == lo ? lo : lo + 1;
    }
    table.d.emplace(s, value);
  }
  return table;
}

std::int64_t closed_form_min(const TestFunction& tau, const MultiIndex& s_in, const Limits& limits) {
  const IndexShape& shape = tau.shape();
  const auto& bound = tau.bound();
  const MultiIndex s = tau.clamp(s_in);

  if (tau.depends_on_min_only()) {
    // Raising the block of v to minimum t costs sum_k max(0, t - s_{v,k}).
    std::vector<std::int64_t> lo = block_minima(shape, s);
    std::vector<std::int64_t> cur = lo;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (;;) {
      MultiIndex t(shape.entries());
      std::int64_t cost = 0;
      for (std::size_t b = 0; b < shape.blocks(); ++b) {
        for (std::size_t i = shape.block_begin(b); i < shape.block_end(b); ++i) {
          t[i] = std::max(s[i], cur[b]);
          cost += t[i] - s[i];
        }
      }
      best = std::min(best, cost + tau(t));
      std::size_t b = 0;
      while (b < shape.blocks() && cur[b] == bound[b]) {
        cur[b] = lo[b];
        ++b;
      }
      if (b == shape.blocks()) break;
      ++cur[b];
    }
    return best;
  }

  std::uint64_t vol = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    vol *= static_cast<std::uint64_t>(bound[shape.block_of(i)] - s[i] + 1);
    if (vol > limits.max_box_volume) fail(ErrorCode::BoxTooLarge, "closed-form enumeration exceeds the box cap");
  }
  Cycle lo(s);
  Cycle hi(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) hi[i] = bound[shape.block_of(i)];
  detail::BoxIterator it(lo, hi);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    const auto& t = it.point().coeffs();
    best = std::min(best, norm(t) - norm(s) + tau(t));
  } while (it.next());
  return best;
}

// ---------------------------------------------------------------------------

TwistedResult twisted_d(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const H1Function& h1_L0,
                        const Limits& limits) {
  const auto r = d_from_h1(G, Z, lp, h1_L0, limits);
  return {r.d, r.codim, r.witness};
}

TwistedResult twisted_d(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                        const EStarCombination& lp0, TwistOracle oracle, const Limits& limits) {
  require_at_least_reduced(G, Z);
  validate(G, lp0);
  const auto index = detail::checked_index(Z, limits);
  std::vector<std::int64_t> H(index.volume());
  if (oracle == TwistOracle::GenericBundle) {
    if (!is_dominant(G, Z, lp0))
      fail(ErrorCode::OracleDomainViolation, "the generic-bundle evaluator needs c^{l'_0}(Z) dominant");
    std::vector<std::int64_t> P, Q;
    detail::prefix_minima(G, lp0.a, index, P, Q);
    for (std::size_t i = 0; i < H.size(); ++i) H[i] = -P[i];
  } else {
    const auto h1 = detail::h1_table(G, index);
    detail::BoxIterator it(Cycle(G.size()), Z);
    std::size_t i = 0;
    do {
      const Cycle& z = it.point();
      std::int64_t best = h1[i] - lprime_pairing(lp0, z);
      for (std::size_t v = 0; v < z.size(); ++v)
        if (z[v] >= 1) best = std::max(best, H[i - index.stride(v)]);
      H[i] = best;
      ++i;
    } while (it.next());
  }
  return twisted_d(G, Z, lp, [&](const Cycle& z) { return H[index.index(z)]; }, limits);
}

}  // namespace abeldim
