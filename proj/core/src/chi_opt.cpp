#include "abeldim/chi_opt.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "abeldim/error.hpp"
#include "box_iter.hpp"
#include "maxflow.hpp"

namespace abeldim {

std::uint64_t Box::volume() const {
  std::uint64_t vol = 1;
  for (std::size_t v = 0; v < lower.size(); ++v) {
    const auto side = static_cast<std::uint64_t>(upper[v] - lower[v] + 1);
    if (side != 0 && vol > std::numeric_limits<std::uint64_t>::max() / side) return std::numeric_limits<std::uint64_t>::max();
    vol *= side;
  }
  return vol;
}

void validate(const PlumbingGraph& G, const Box& box) {
  if (box.lower.size() != G.size() || box.upper.size() != G.size())
    fail(ErrorCode::VertexMismatch, "box does not match the graph");
  for (std::size_t v = 0; v < G.size(); ++v) {
    if (box.lower[v] > box.upper[v])
      fail(ErrorCode::EmptyBox, "lower > upper at '" + G.id(v) + "'");
  }
}

std::vector<std::int64_t> shift_linear_term(const PlumbingGraph& G, const QCycle& shift) {
  if (shift.size() != G.size()) fail(ErrorCode::VertexMismatch, "shift does not match the graph");
  std::vector<std::int64_t> lambda(G.size());
  for (std::size_t v = 0; v < G.size(); ++v) {
    const Rational c = -pairing_with_basis(G, shift, v);
    if (boost::multiprecision::denominator(c) != 1)
      fail(ErrorCode::NonIntegralShift, "shift pairs non-integrally with E_" + G.id(v));
    lambda[v] = boost::multiprecision::numerator(c).convert_to<std::int64_t>();
  }
  return lambda;
}

std::vector<std::int64_t> shift_linear_term(const PlumbingGraph& G, const EStarCombination& minus_lp) {
  validate(G, minus_lp);
  return minus_lp.a;
}

std::int64_t linear_objective(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const Cycle& l) {
  std::int64_t s = chi(G, l);
  for (std::size_t v = 0; v < l.size(); ++v) s += lambda[v] * l[v];
  return s;
}

Cycle laufer_fundamental_cycle(const PlumbingGraph& G) {
  Cycle z = Cycle::reduced(G.size());
  for (;;) {
    std::size_t v = 0;
    while (v < G.size() && pairing_with_basis(G, z, v) <= 0) ++v;
    if (v == G.size()) return z;
    z[v] += 1;
  }
}

namespace {

// Unary part chi restricted to one coordinate plus the linear term.
std::int64_t unary(std::int64_t e, std::int64_t lambda, std::int64_t x) {
  return -e * (x * (x - 1) / 2) + x + lambda * x;
}

}  // namespace

LinearMinResult min_chi_linear(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const Box& box) {
  validate(G, box);
  const std::size_t n = G.size();
  const Cycle& lo = box.lower;
  const Cycle& hi = box.upper;

  // Node (v, j), 1 <= j <= hi_v - lo_v, is on the source side iff x_v >= lo_v + j.
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(hi[v] - lo[v]);
  const std::size_t nodes = offset[n];
  const std::size_t S = nodes;
  const std::size_t T = nodes + 1;
  detail::MaxFlow flow(nodes + 2);

  std::int64_t constant = 0;
  for (std::size_t v = 0; v < n; ++v) constant += unary(G.self_intersection(v), lambda[v], lo[v]);
  for (auto [v, w] : G.edges()) constant -= lo[v] * lo[w];

  std::vector<std::int64_t> coef(nodes, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::int64_t nb_lo = 0;
    for (auto w : G.neighbors(v)) nb_lo += lo[w];
    for (std::int64_t j = 1; j <= hi[v] - lo[v]; ++j) {
      const auto node = offset[v] + static_cast<std::size_t>(j - 1);
      coef[node] = unary(G.self_intersection(v), lambda[v], lo[v] + j) -
                   unary(G.self_intersection(v), lambda[v], lo[v] + j - 1) - nb_lo;
      if (j >= 2) flow.add_edge(node, node - 1, detail::MaxFlow::kInfinity);
    }
  }
  // -y_a y_b = -y_a + y_a (1 - y_b)
  for (auto [v, w] : G.edges()) {
    const auto nv = hi[v] - lo[v];
    const auto nw = hi[w] - lo[w];
    if (nv == 0 || nw == 0) continue;
    for (std::int64_t j = 0; j < nv; ++j) {
      const auto a = offset[v] + static_cast<std::size_t>(j);
      coef[a] -= nw;
      for (std::int64_t k = 0; k < nw; ++k) flow.add_edge(a, offset[w] + static_cast<std::size_t>(k), 1);
    }
  }
  for (std::size_t node = 0; node < nodes; ++node) {
    if (coef[node] >= 0) {
      flow.add_edge(node, T, coef[node]);
    } else {
      constant += coef[node];
      flow.add_edge(S, node, -coef[node]);
    }
  }

  LinearMinResult r;
  r.value = constant + flow.run(S, T);
  const auto side_min = flow.source_side_min(S);
  const auto side_max = flow.source_side_max(T);
  r.min_minimizer = lo;
  r.max_minimizer = lo;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t node = offset[v]; node < offset[v + 1]; ++node) {
      r.min_minimizer[v] += side_min[node] ? 1 : 0;
      r.max_minimizer[v] += side_max[node] ? 1 : 0;
    }
  }
  return r;
}

LinearMinResult brute_min_chi_linear(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const Box& box,
                                     std::vector<Cycle>* minimizers, const Limits& limits) {
  validate(G, box);
  if (box.volume() > limits.max_box_volume)
    fail(ErrorCode::BoxTooLarge, "box volume exceeds " + std::to_string(limits.max_box_volume));
  LinearMinResult r;
  r.value = std::numeric_limits<std::int64_t>::max();
  std::vector<Cycle> found;
  detail::BoxIterator it(box.lower, box.upper);
  do {
    const auto& l = it.point();
    const auto val = linear_objective(G, lambda, l);
    if (val < r.value) {
      r.value = val;
      found.clear();
    }
    if (val == r.value) found.push_back(l);
  } while (it.next());
  r.min_minimizer = found.front();
  r.max_minimizer = found.front();
  for (const auto& l : found) {
    r.min_minimizer = meet(r.min_minimizer, l);
    r.max_minimizer = join(r.max_minimizer, l);
  }
  if (minimizers) *minimizers = std::move(found);
  return r;
}

namespace {

MinChiResult to_rational(const PlumbingGraph& G, const QCycle& shift, LinearMinResult r) {
  MinChiResult out;
  out.value = chi(G, shift) + r.value;
  out.min_minimizer = std::move(r.min_minimizer);
  out.max_minimizer = std::move(r.max_minimizer);
  return out;
}

}  // namespace

MinChiResult min_chi_box(const PlumbingGraph& G, const QCycle& shift, const Box& box) {
  return to_rational(G, shift, min_chi_linear(G, shift_linear_term(G, shift), box));
}

MinChiResult brute_min_chi_box(const PlumbingGraph& G, const QCycle& shift, const Box& box,
                               std::vector<Cycle>* minimizers, const Limits& limits) {
  return to_rational(G, shift, brute_min_chi_linear(G, shift_linear_term(G, shift), box, minimizers, limits));
}

namespace {

bool lex_smaller(const Cycle& a, const Cycle& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a.coeffs() < b.coeffs();
}

// Picks the element comparable-below (or above) all others if one exists,
// otherwise the smallest (largest) by total.
Cycle pick_extreme(const std::vector<Cycle>& cands, bool want_min, bool& unique) {
  for (const auto& c : cands) {
    bool extreme = true;
    for (const auto& d : cands) {
      if (want_min ? !leq(c, d) : !leq(d, c)) {
        extreme = false;
        break;
      }
    }
    if (extreme) {
      unique = true;
      return c;
    }
  }
  unique = false;
  Cycle best = cands.front();
  for (const auto& c : cands) {
    if (want_min ? lex_smaller(c, best) : lex_smaller(best, c)) best = c;
  }
  return best;
}

}  // namespace

LinearMinResult min_chi_positive(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const Cycle& upper,
                                 bool* unique_min, bool* unique_max) {
  const std::size_t n = G.size();
  if (upper.size() != n) fail(ErrorCode::VertexMismatch, "bound does not match the graph");
  if (upper.is_zero() || !upper.is_effective()) fail(ErrorCode::EmptyBox, "no nonzero effective cycle below the bound");
  const Box whole{Cycle(n), upper};
  auto r0 = min_chi_linear(G, lambda, whole);
  if (!r0.min_minimizer.is_zero()) {
    if (unique_min) *unique_min = true;
    if (unique_max) *unique_max = true;
    return r0;
  }
  // 0 is a minimizer. Every minimal (maximal) nonzero minimizer is the
  // minimal (maximal) minimizer of some box [E_v, upper].
  std::vector<LinearMinResult> per_v;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t v = 0; v < n; ++v) {
    if (upper[v] < 1) continue;
    Box b{Cycle::basis(n, v), upper};
    per_v.push_back(min_chi_linear(G, lambda, b));
    best = std::min(best, per_v.back().value);
  }
  std::vector<Cycle> mins;
  std::vector<Cycle> maxs;
  for (const auto& r : per_v) {
    if (r.value != best) continue;
    mins.push_back(r.min_minimizer);
    maxs.push_back(r.max_minimizer);
  }
  LinearMinResult out;
  out.value = best;
  bool um = true;
  bool uM = true;
  out.min_minimizer = pick_extreme(mins, true, um);
  out.max_minimizer = pick_extreme(maxs, false, uM);
  if (unique_min) *unique_min = um;
  if (unique_max) *unique_max = uM;
  return out;
}

Cycle default_cap(const PlumbingGraph& G) {
  const Cycle zk = ceil_to_cycle(canonical_cycle(G));
  const Cycle zmin = laufer_fundamental_cycle(G);
  Cycle cap(G.size());
  for (std::size_t v = 0; v < G.size(); ++v) cap[v] = std::max(2 * zk[v], 4 * zmin[v]);
  return cap;
}

EffectiveMinResult min_chi_effective(const PlumbingGraph& G, const QCycle& shift, Positivity positivity,
                                     const Limits& limits) {
  const auto lambda = shift_linear_term(G, shift);
  const Rational base = chi(G, shift);
  Cycle cap = default_cap(G);
  std::optional<EffectiveMinResult> prev;
  for (int round = 0; round <= limits.max_doubling_rounds; ++round) {
    EffectiveMinResult cur;
    cur.cap = cap;
    cur.rounds = round + 1;
    LinearMinResult r;
    if (positivity == Positivity::NonNegative) {
      r = min_chi_linear(G, lambda, Box{Cycle(G.size()), cap});
    } else {
      r = min_chi_positive(G, lambda, cap, &cur.unique_min, &cur.unique_max);
    }
    cur.value = base + r.value;
    cur.min_minimizer = std::move(r.min_minimizer);
    cur.max_minimizer = std::move(r.max_minimizer);
    if (prev && prev->value == cur.value && prev->max_minimizer == cur.max_minimizer &&
        prev->min_minimizer == cur.min_minimizer) {
      return *prev;
    }
    prev = std::move(cur);
    cap = 2 * cap;
  }
  fail(ErrorCode::NoConvergence,
       "minimum did not stabilize after " + std::to_string(limits.max_doubling_rounds) + " doublings");
}

MaxMinimizerReport max_of_minimizer_set(const PlumbingGraph& G, const Cycle& bound, bool brute_check,
                                        const Limits& limits) {
  const std::size_t n = G.size();
  const std::vector<std::int64_t> zero(n, 0);
  MaxMinimizerReport rep;
  bool unique_min = true;
  bool unique_max = true;
  const auto cut = min_chi_positive(G, zero, bound, &unique_min, &unique_max);
  rep.value = cut.value;
  if (unique_max) rep.max_cut = cut.max_minimizer;

  // Walk over chi-preserving unit moves from a minimal minimizer.
  using Key = std::vector<std::int64_t>;
  std::unordered_set<Key, boost::hash<Key>> seen;
  std::deque<Cycle> queue{cut.min_minimizer};
  seen.insert(cut.min_minimizer.coeffs());
  Cycle hull = cut.min_minimizer;
  bool truncated = false;
  while (!queue.empty()) {
    Cycle l = std::move(queue.front());
    queue.pop_front();
    hull = join(hull, l);
    for (std::size_t v = 0; v < n; ++v) {
      for (int step : {1, -1}) {
        Cycle m = l;
        m[v] += step;
        if (m[v] < 0 || m[v] > bound[v] || m.is_zero()) continue;
        if (chi(G, m) != rep.value || seen.count(m.coeffs())) continue;
        if (seen.size() >= limits.max_box_volume) {
          truncated = true;
          continue;
        }
        seen.insert(m.coeffs());
        queue.push_back(std::move(m));
      }
    }
  }
  rep.bfs_visited = seen.size();
  if (!truncated && seen.count(hull.coeffs())) rep.max_bfs = hull;

  if (brute_check && Box{Cycle(n), bound}.volume() <= limits.max_box_volume) {
    rep.brute_checked = true;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<Cycle> found;
    detail::BoxIterator it(Cycle(n), bound);
    do {
      const auto& l = it.point();
      if (l.is_zero()) continue;
      const auto val = chi(G, l);
      if (val < best) {
        best = val;
        found.clear();
      }
      if (val == best) found.push_back(l);
    } while (it.next());
    Cycle top = found.front();
    for (const auto& l : found) top = join(top, l);
    if (best == rep.value && chi(G, top) == best) rep.max_brute = top;
    if (best != rep.value) rep.agree = false;
  }

  rep.max = rep.max_cut;
  auto same = [](const std::optional<Cycle>& a, const std::optional<Cycle>& b) { return a == b; };
  if (!truncated && !same(rep.max_cut, rep.max_bfs)) rep.agree = false;
  if (rep.brute_checked && !same(rep.max_cut, rep.max_brute)) rep.agree = false;
  return rep;
}

}  // namespace abeldim
