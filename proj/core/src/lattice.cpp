#include "abeldim/lattice.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>

#include "abeldim/error.hpp"

namespace abeldim {

BigInt floor_of(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quo = num / den;
  if (num % den != 0 && num < 0) quo -= 1;
  return quo;
}

BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) fail(ErrorCode::VertexMismatch, "cycle sizes differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    fail(ErrorCode::InvalidArgument, "coefficient overflows 64 bits");
  return x.convert_to<std::int64_t>();
}

}  // namespace

Cycle Cycle::basis(std::size_t n, std::size_t v) {
  Cycle x(n);
  x.c_.at(v) = 1;
  return x;
}

Cycle Cycle::reduced(std::size_t n) { return Cycle(std::vector<std::int64_t>(n, 1)); }

Cycle Cycle::reduced(std::size_t n, const VertexSet& J) {
  Cycle x(n);
  for (auto v : J) x.c_.at(v) = 1;
  return x;
}

bool Cycle::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c == 0; });
}

bool Cycle::is_effective() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c >= 0; });
}

std::int64_t Cycle::total() const noexcept { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

Cycle& Cycle::operator+=(const Cycle& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cycle operator*(std::int64_t k, Cycle a) {
  for (auto& c : a.c_) c *= k;
  return a;
}

bool leq(const Cycle& a, const Cycle& b) {
  require_same_size(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Cycle meet(const Cycle& a, const Cycle& b) {
  require_same_size(a.size(), b.size());
  Cycle r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Cycle join(const Cycle& a, const Cycle& b) {
  require_same_size(a.size(), b.size());
  Cycle r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

QCycle::QCycle(const Cycle& x) : c_(x.size()) {
  for (std::size_t i = 0; i < x.size(); ++i) c_[i] = x[i];
}

bool QCycle::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

Cycle QCycle::to_cycle() const {
  if (!is_integral()) fail(ErrorCode::NonIntegralShift, "rational cycle is not integral");
  Cycle x(size());
  for (std::size_t i = 0; i < size(); ++i) x[i] = to_i64(boost::multiprecision::numerator(c_[i]));
  return x;
}

QCycle& QCycle::operator+=(const QCycle& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QCycle& QCycle::operator-=(const QCycle& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QCycle operator*(const Rational& k, QCycle a) {
  for (auto& c : a.c_) c *= k;
  return a;
}

QCycle operator-(QCycle a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

QCycle floor_cycle(const QCycle& x) {
  QCycle r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = Rational(floor_of(x[i]));
  return r;
}

Cycle floor_to_cycle(const QCycle& x) {
  Cycle r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = to_i64(floor_of(x[i]));
  return r;
}

Cycle ceil_to_cycle(const QCycle& x) {
  Cycle r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = to_i64(ceil_of(x[i]));
  return r;
}

// ---------------------------------------------------------------------------

struct PlumbingGraph::Cache {
  std::once_flag once;
  std::vector<QCycle> dual;
};

std::optional<std::size_t> PlumbingGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PlumbingGraph::index_of(std::string_view id) const {
  auto v = find(id);
  if (!v) fail(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(id) + "'");
  return *v;
}

std::int64_t PlumbingGraph::intersection(std::size_t v, std::size_t w) const {
  if (v == w) return e_[v];
  const auto& n = adj_[v];
  return std::find(n.begin(), n.end(), w) != n.end() ? 1 : 0;
}

GraphSpec PlumbingGraph::spec() const {
  GraphSpec s;
  for (std::size_t v = 0; v < size(); ++v) s.vertices.push_back({ids_[v], e_[v]});
  for (auto [v, w] : edges_) s.edges.emplace_back(ids_[v], ids_[w]);
  return s;
}

namespace {

// Gauss-Jordan on -I, returning the columns of (-I)^{-1}.
std::vector<QCycle> invert_negative(const PlumbingGraph& G) {
  const std::size_t n = G.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = -G.intersection(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorCode::NotNegativeDefinite, "singular intersection matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<QCycle> cols(n, QCycle(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = m[i][n + j];
  return cols;
}

}  // namespace

const std::vector<QCycle>& PlumbingGraph::dual_basis() const {
  std::call_once(cache_->once, [this] { cache_->dual = invert_negative(*this); });
  return cache_->dual;
}

PlumbingGraph build_graph_unchecked(const GraphSpec& spec) {
  if (spec.vertices.empty()) fail(ErrorCode::InvalidArgument, "graph has no vertices");
  PlumbingGraph G;
  const std::size_t n = spec.vertices.size();
  G.ids_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& vert = spec.vertices[v];
    if (!G.index_.emplace(vert.id, v).second) fail(ErrorCode::InvalidArgument, "duplicate vertex id '" + vert.id + "'");
    G.ids_.push_back(vert.id);
    G.e_.push_back(vert.e);
  }
  G.adj_.assign(n, {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : spec.edges) {
    std::size_t v = G.index_of(a);
    std::size_t w = G.index_of(b);
    if (v == w) fail(ErrorCode::NotATree, "loop at '" + a + "'");
    if (v > w) std::swap(v, w);
    if (!seen.emplace(v, w).second) fail(ErrorCode::DuplicateEdge, "edge " + a + "-" + b + " given twice");
    G.adj_[v].push_back(w);
    G.adj_[w].push_back(v);
  }
  G.edges_.assign(seen.begin(), seen.end());
  for (auto& nb : G.adj_) std::sort(nb.begin(), nb.end());
  if (G.edges_.size() + 1 != n)
    fail(ErrorCode::NotATree, std::to_string(n) + " vertices but " + std::to_string(G.edges_.size()) + " edges");
  VertexSet all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (!is_connected(G, all)) fail(ErrorCode::NotATree, "graph is disconnected");
  G.cache_ = std::make_shared<PlumbingGraph::Cache>();
  return G;
}

PlumbingGraph build_graph(const GraphSpec& spec) {
  PlumbingGraph G = build_graph_unchecked(spec);
  const auto minors = leading_minors(G);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (minors[k] <= 0)
      fail(ErrorCode::NotNegativeDefinite,
           "leading minor " + std::to_string(k + 1) + " of -I is " + minors[k].str());
  }
  return G;
}

std::vector<BigInt> leading_minors(const PlumbingGraph& G) {
  // Bareiss without pivoting: after step k the pivot a[k][k] is the (k+1)-th
  // leading principal minor. A zero pivot means that minor vanishes; later
  // minors are then not computed.
  const std::size_t n = G.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -G.intersection(i, j);
  std::vector<BigInt> minors;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return minors;
}

BigInt determinant_abs(const PlumbingGraph& G) {
  const auto minors = leading_minors(G);
  if (minors.size() != G.size()) return 0;
  BigInt d = minors.back();
  return d < 0 ? BigInt(-d) : d;
}

std::int64_t pairing(const PlumbingGraph& G, const Cycle& x, const Cycle& y) {
  require_same_size(x.size(), G.size());
  require_same_size(y.size(), G.size());
  std::int64_t s = 0;
  for (std::size_t v = 0; v < G.size(); ++v) s += G.self_intersection(v) * x[v] * y[v];
  for (auto [v, w] : G.edges()) s += x[v] * y[w] + x[w] * y[v];
  return s;
}

Rational pairing(const PlumbingGraph& G, const QCycle& x, const QCycle& y) {
  require_same_size(x.size(), G.size());
  require_same_size(y.size(), G.size());
  Rational s = 0;
  for (std::size_t v = 0; v < G.size(); ++v) s += G.self_intersection(v) * x[v] * y[v];
  for (auto [v, w] : G.edges()) s += x[v] * y[w] + x[w] * y[v];
  return s;
}

Rational pairing(const PlumbingGraph& G, const QCycle& x, const Cycle& y) {
  require_same_size(x.size(), G.size());
  require_same_size(y.size(), G.size());
  Rational s = 0;
  for (std::size_t v = 0; v < G.size(); ++v)
    if (y[v] != 0) s += pairing_with_basis(G, x, v) * y[v];
  return s;
}

Rational pairing_with_basis(const PlumbingGraph& G, const QCycle& x, std::size_t v) {
  Rational s = G.self_intersection(v) * x[v];
  for (auto w : G.neighbors(v)) s += x[w];
  return s;
}

std::int64_t pairing_with_basis(const PlumbingGraph& G, const Cycle& x, std::size_t v) {
  std::int64_t s = G.self_intersection(v) * x[v];
  for (auto w : G.neighbors(v)) s += x[w];
  return s;
}

QCycle dual_cycle(const PlumbingGraph& G, std::size_t v) {
  if (v >= G.size()) fail(ErrorCode::VertexMismatch, "vertex index out of range");
  return G.dual_basis()[v];
}

QCycle canonical_cycle(const PlumbingGraph& G) {
  // (Z_K, E_w) = e_w + 2 and (E_v^*, E_w) = -delta_vw.
  QCycle zk(G.size());
  const auto& dual = G.dual_basis();
  for (std::size_t v = 0; v < G.size(); ++v) {
    const std::int64_t rhs = G.self_intersection(v) + 2;
    if (rhs != 0) zk -= Rational(rhs) * dual[v];
  }
  return zk;
}

Rational chi(const PlumbingGraph& G, const QCycle& x) {
  // chi(x) = -(x, x - Z_K)/2 = -((x,x) - sum_v x_v (e_v + 2)) / 2, using
  // (x, Z_K) = sum_v x_v (E_v, Z_K).
  Rational xk = 0;
  for (std::size_t v = 0; v < G.size(); ++v) xk += x[v] * (G.self_intersection(v) + 2);
  return -(pairing(G, x, x) - xk) / 2;
}

std::int64_t chi(const PlumbingGraph& G, const Cycle& x) {
  require_same_size(x.size(), G.size());
  std::int64_t twice = 0;
  for (std::size_t v = 0; v < G.size(); ++v) {
    const std::int64_t e = G.self_intersection(v);
    twice += -e * x[v] * x[v] + (e + 2) * x[v];
  }
  for (auto [v, w] : G.edges()) twice -= 2 * x[v] * x[w];
  return twice / 2;
}

bool in_lipman_cone(const PlumbingGraph& G, const QCycle& x) {
  require_same_size(x.size(), G.size());
  for (std::size_t v = 0; v < G.size(); ++v)
    if (pairing_with_basis(G, x, v) > 0) return false;
  return true;
}

bool in_lipman_cone(const PlumbingGraph& G, const Cycle& x) {
  require_same_size(x.size(), G.size());
  for (std::size_t v = 0; v < G.size(); ++v)
    if (pairing_with_basis(G, x, v) > 0) return false;
  return true;
}

Cycle BlowupMap::pull(const Cycle& x) const {
  require_same_size(x.size(), source_size);
  Cycle r(source_size + 1);
  for (std::size_t u = 0; u < source_size; ++u)
    if (x[u] != 0) r += x[u] * matrix[u];
  return r;
}

QCycle BlowupMap::pull(const QCycle& x) const {
  require_same_size(x.size(), source_size);
  QCycle r(source_size + 1);
  for (std::size_t u = 0; u < source_size; ++u) {
    for (std::size_t t = 0; t < source_size + 1; ++t)
      if (matrix[u][t] != 0) r[t] += x[u] * matrix[u][t];
  }
  return r;
}

std::pair<PlumbingGraph, BlowupMap> blow_up_generic(const PlumbingGraph& G, std::size_t v,
                                                    std::optional<std::string> new_id) {
  if (v >= G.size()) fail(ErrorCode::VertexMismatch, "vertex index out of range");
  GraphSpec spec = G.spec();
  std::string id = new_id ? *new_id : G.id(v) + "'";
  if (!new_id) {
    while (G.find(id)) id += "'";
  } else if (G.find(id)) {
    fail(ErrorCode::InvalidArgument, "vertex id '" + id + "' already used");
  }
  spec.vertices[v].e -= 1;
  spec.vertices.push_back({id, -1});
  spec.edges.emplace_back(G.id(v), id);

  BlowupMap map;
  map.source_size = G.size();
  map.blown_up = v;
  map.new_vertex = G.size();
  map.new_id = id;
  for (std::size_t u = 0; u < G.size(); ++u) {
    Cycle col = Cycle::basis(G.size() + 1, u);
    if (u == v) col[map.new_vertex] = 1;
    map.matrix.push_back(std::move(col));
  }
  return {build_graph_unchecked(spec), std::move(map)};
}

VertexSet support(const Cycle& x) {
  VertexSet s;
  for (std::size_t v = 0; v < x.size(); ++v)
    if (x[v] != 0) s.push_back(v);
  return s;
}

Cycle restrict(const Cycle& x, const VertexSet& J) {
  Cycle r(x.size());
  for (auto v : J) r[v] = x[v];
  return r;
}

VertexSet complement(std::size_t n, const VertexSet& J) {
  std::vector<bool> in(n, false);
  for (auto v : J) in.at(v) = true;
  VertexSet r;
  for (std::size_t v = 0; v < n; ++v)
    if (!in[v]) r.push_back(v);
  return r;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<VertexSet> components(const PlumbingGraph& G, const VertexSet& J) {
  std::vector<int> mark(G.size(), -1);
  for (auto v : J) mark.at(v) = 0;
  std::vector<VertexSet> comps;
  for (auto root : J) {
    if (mark[root] != 0) continue;
    VertexSet comp;
    std::vector<std::size_t> stack{root};
    mark[root] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto w : G.neighbors(v)) {
        if (mark[w] == 0) {
          mark[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const PlumbingGraph& G, const VertexSet& J) { return components(G, J).size() <= 1; }

bool EStarCombination::is_zero() const noexcept {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t EStarCombination::total() const noexcept { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

void validate(const PlumbingGraph& G, const EStarCombination& lp) {
  require_same_size(lp.size(), G.size());
  for (std::size_t v = 0; v < lp.size(); ++v)
    if (lp.a[v] < 0) fail(ErrorCode::NotInLipmanCone, "negative E* coefficient at '" + G.id(v) + "'");
}

VertexSet estar_support(const EStarCombination& lp) {
  VertexSet s;
  for (std::size_t v = 0; v < lp.size(); ++v)
    if (lp.a[v] != 0) s.push_back(v);
  return s;
}

QCycle minus_lprime(const PlumbingGraph& G, const EStarCombination& lp) {
  validate(G, lp);
  QCycle x(G.size());
  const auto& dual = G.dual_basis();
  for (std::size_t v = 0; v < lp.size(); ++v)
    if (lp.a[v] != 0) x += Rational(lp.a[v]) * dual[v];
  return x;
}

std::int64_t lprime_pairing(const EStarCombination& lp, const Cycle& x) {
  require_same_size(lp.size(), x.size());
  std::int64_t s = 0;
  for (std::size_t v = 0; v < x.size(); ++v) s += lp.a[v] * x[v];
  return s;
}

EStarCombination estar_from_qcycle(const PlumbingGraph& G, const QCycle& minus_lp) {
  require_same_size(minus_lp.size(), G.size());
  EStarCombination lp;
  lp.a.resize(G.size());
  for (std::size_t v = 0; v < G.size(); ++v) {
    const Rational c = -pairing_with_basis(G, minus_lp, v);
    if (boost::multiprecision::denominator(c) != 1)
      fail(ErrorCode::NonIntegralShift, "class is not in the dual lattice at '" + G.id(v) + "'");
    if (c < 0) fail(ErrorCode::NotInLipmanCone, "class pairs positively with E_" + G.id(v));
    lp.a[v] = to_i64(boost::multiprecision::numerator(c));
  }
  return lp;
}

}  // namespace abeldim
