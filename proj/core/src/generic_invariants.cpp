#include "abeldim/generic_invariants.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "abeldim/error.hpp"
#include "box_iter.hpp"
#include "tables.hpp"

namespace abeldim {

void require_at_least_reduced(const PlumbingGraph& G, const Cycle& Z) {
  if (Z.size() != G.size()) fail(ErrorCode::VertexMismatch, "cycle does not match the graph");
  for (std::size_t v = 0; v < Z.size(); ++v)
    if (Z[v] < 1) fail(ErrorCode::InvalidArgument, "Z must be >= E (coefficient at '" + G.id(v) + "' is " + std::to_string(Z[v]) + ")");
}

namespace {

void require_effective(const PlumbingGraph& G, const Cycle& Z) {
  if (Z.size() != G.size()) fail(ErrorCode::VertexMismatch, "cycle does not match the graph");
  if (!Z.is_effective()) fail(ErrorCode::InvalidArgument, "cycle must be effective");
}

// Tree support bitmasks for vertex sets of at most 64 vertices.
class MaskGraph {
 public:
  MaskGraph(const PlumbingGraph& G, const Limits& limits) : adj_(G.size(), 0) {
    if (G.size() > limits.max_support_vertices || G.size() > 63)
      fail(ErrorCode::SupportEnumerationTooLarge,
           std::to_string(G.size()) + " vertices exceed the cap of " + std::to_string(limits.max_support_vertices));
    for (auto [v, w] : G.edges()) {
      adj_[v] |= std::uint64_t{1} << w;
      adj_[w] |= std::uint64_t{1} << v;
    }
  }

  // Splits mask into connected components, ordered by lowest vertex.
  void components(std::uint64_t mask, std::vector<std::uint64_t>& out) const {
    out.clear();
    while (mask) {
      std::uint64_t comp = mask & (~mask + 1);
      for (;;) {
        std::uint64_t grow = comp;
        for (std::uint64_t rest = comp; rest; rest &= rest - 1) grow |= adj_[std::countr_zero(rest)] & mask;
        if (grow == comp) break;
        comp = grow;
      }
      out.push_back(comp);
      mask &= ~comp;
    }
  }

 private:
  std::vector<std::uint64_t> adj_;
};

VertexSet to_set(std::uint64_t mask) {
  VertexSet s;
  for (; mask; mask &= mask - 1) s.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return s;
}

Box support_box(const Cycle& Z, std::uint64_t mask) {
  Box b{Cycle(Z.size()), Cycle(Z.size())};
  for (auto v : to_set(mask)) {
    b.lower[v] = 1;
    b.upper[v] = Z[v];
  }
  return b;
}

struct Weight {
  std::int64_t value = 0;
  Cycle argmin;
};

// Memoized 1 - min{chi(l) + (l', l) : E_C <= l <= Z|_C} for connected C.
class ComponentWeights {
 public:
  ComponentWeights(const PlumbingGraph& G, const Cycle& Z, const std::vector<std::int64_t>& lambda)
      : G_(G), Z_(Z), lambda_(lambda) {}

  const Weight& get(std::uint64_t comp) {
    auto it = memo_.find(comp);
    if (it != memo_.end()) return it->second;
    const auto r = min_chi_linear(G_, lambda_, support_box(Z_, comp));
    return memo_.emplace(comp, Weight{1 - r.value, r.min_minimizer}).first->second;
  }

  std::size_t evaluated() const noexcept { return memo_.size(); }

 private:
  const PlumbingGraph& G_;
  const Cycle& Z_;
  const std::vector<std::int64_t>& lambda_;
  std::unordered_map<std::uint64_t, Weight> memo_;
};

struct SupportMax {
  std::int64_t value = 0;
  std::uint64_t mask = 0;
};

// max over supports J of the sum of component weights; J = 0 gives 0.
// Ties go to fewer vertices, then to the smaller mask.
SupportMax best_support(const MaskGraph& mg, std::size_t n, ComponentWeights& weights) {
  SupportMax best;
  std::vector<std::uint64_t> comps;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    mg.components(mask, comps);
    std::int64_t total = 0;
    for (auto c : comps) total += weights.get(c).value;
    if (total > best.value ||
        (total == best.value && best.mask != 0 && std::popcount(mask) < std::popcount(best.mask))) {
      best.value = total;
      best.mask = mask;
    }
  }
  return best;
}

}  // namespace

std::int64_t h1_generic(const PlumbingGraph& G, const Cycle& Zp) {
  require_effective(G, Zp);
  if (Zp.is_zero()) return 0;
  const VertexSet J = support(Zp);
  const Box box{Cycle::reduced(G.size(), J), Zp};
  const auto r = min_chi_linear(G, std::vector<std::int64_t>(G.size(), 0), box);
  return static_cast<std::int64_t>(components(G, J).size()) - r.value;
}

bool is_dominant(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp) {
  require_effective(G, Z);
  const auto lambda = shift_linear_term(G, lp);
  const auto r = min_chi_linear(G, lambda, Box{Cycle(G.size()), Z});
  return r.value == 0 && r.max_minimizer.is_zero();
}

std::int64_t e_Z_of_I(const PlumbingGraph& G, const Cycle& Z, const VertexSet& I) {
  require_at_least_reduced(G, Z);
  return h1_generic(G, Z) - h1_generic(G, restrict(Z, complement(G.size(), I)));
}

std::int64_t e_Z(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp) {
  validate(G, lp);
  return e_Z_of_I(G, Z, estar_support(lp));
}

std::int64_t d_generic(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, DMethod method,
                       const Limits& limits) {
  require_at_least_reduced(G, Z);
  validate(G, lp);
  if (method == DMethod::Direct) {
    const auto index = detail::checked_index(Z, limits);
    const auto M = detail::support_min_chi(G, index);
    const auto comps = detail::component_counts(G, index);
    // 1 - min_{E <= l <= Z} chi(l) + min_{Z1} [(l', Z1) + min_{E_|Z1| <= l <= Z1} chi(l) - chi(E_|Z1|)]
    std::int64_t best = 0;  // Z1 = 0
    detail::BoxIterator it(Cycle(G.size()), Z);
    std::size_t i = 0;
    do {
      if (i != 0) best = std::min(best, lprime_pairing(lp, it.point()) + M[i] - comps[i]);
      ++i;
    } while (it.next());
    return 1 - M[index.index(Z)] + best;
  }

  const MaskGraph mg(G, limits);
  const std::size_t n = G.size();
  const auto lambda = shift_linear_term(G, lp);
  std::int64_t codim = 0;  // Z1 = 0
  std::vector<std::uint64_t> comps;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    // max over supp Z1 = J of h1(Z1) - (l', Z1) = #comp(J) - min over [E_J, Z|_J]
    mg.components(mask, comps);
    const auto r = min_chi_linear(G, lambda, support_box(Z, mask));
    codim = std::max(codim, static_cast<std::int64_t>(comps.size()) - r.value);
  }
  return h1_generic(G, Z) - codim;
}

CodimResult codim_generic(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const Limits& limits) {
  require_at_least_reduced(G, Z);
  const MaskGraph mg(G, limits);
  const auto lambda = shift_linear_term(G, lp);
  ComponentWeights weights(G, Z, lambda);
  const auto best = best_support(mg, G.size(), weights);
  CodimResult r;
  r.codim = best.value;
  r.witness = Cycle(G.size());
  std::vector<std::uint64_t> comps;
  mg.components(best.mask, comps);
  for (auto c : comps) r.witness += weights.get(c).argmin;
  return r;
}

std::int64_t codim_objective(const PlumbingGraph& G, const EStarCombination& lp, const Cycle& Z1) {
  require_effective(G, Z1);
  const auto J = support(Z1);
  return -lprime_pairing(lp, Z1) - chi(G, Z1) + chi(G, Cycle::reduced(G.size(), J));
}

std::int64_t bound_T(const PlumbingGraph& G, const Cycle& Zc, const EStarCombination& lp) {
  require_effective(G, Zc);
  const auto J = support(Zc);
  if (J.empty() || !is_connected(G, J)) fail(ErrorCode::DisconnectedSupport, "T needs a nonzero cycle with connected support");
  const auto lambda = shift_linear_term(G, lp);
  const auto r = min_chi_linear(G, lambda, Box{Cycle(G.size()), Zc});
  const bool dominant = r.value == 0 && r.max_minimizer.is_zero();
  return -r.value + (dominant ? 0 : 1);
}

std::int64_t bound_t(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const Limits& limits) {
  // A minimal maximizing Z' has every component non-dominant and realizing
  // its own box minimum, so each contributes 1 - chi(Z'_i) - (l', Z'_i).
  require_at_least_reduced(G, Z);
  const MaskGraph mg(G, limits);
  const auto lambda = shift_linear_term(G, lp);
  ComponentWeights weights(G, Z, lambda);
  return best_support(mg, G.size(), weights).value;
}

std::int64_t bound_t_brute(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const Limits& limits) {
  require_at_least_reduced(G, Z);
  const auto index = detail::checked_index(Z, limits);
  const auto lambda = shift_linear_term(G, lp);
  std::vector<std::int64_t> P, Q;
  detail::prefix_minima(G, lambda, index, P, Q);
  auto T_at = [&](std::size_t i) { return -P[i] + (Q[i] > 0 ? 0 : 1); };

  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  detail::BoxIterator it(Cycle(G.size()), Z);
  do {
    const Cycle& zp = it.point();
    if (zp.is_zero()) continue;
    std::int64_t total = 0;
    for (const auto& C : components(G, support(zp))) total += T_at(index.index(restrict(zp, C)));
    best = std::max(best, total);
  } while (it.next());
  return best;
}

MinimizerPair structure_cycles(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                               const Limits& limits) {
  require_at_least_reduced(G, Z);
  validate(G, lp);
  const auto index = detail::checked_index(Z, limits);
  const auto h1 = detail::h1_table(G, index);

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::size_t> argmins;
  std::vector<Cycle> cycles;
  detail::BoxIterator it(Cycle(G.size()), Z);
  std::size_t i = 0;
  do {
    const auto f = lprime_pairing(lp, it.point()) - h1[i];
    if (f < best) {
      best = f;
      cycles.clear();
    }
    if (f == best) cycles.push_back(it.point());
    ++i;
  } while (it.next());

  constexpr std::size_t kMaxPairs = 20'000;
  if (cycles.size() > kMaxPairs)
    fail(ErrorCode::BoxTooLarge, std::to_string(cycles.size()) + " minimizers; closure check skipped");

  MinimizerPair out;
  out.value = h1[index.index(Z)] + best;
  out.minimizer_count = cycles.size();
  out.c_min = cycles.front();
  out.c_max = cycles.front();
  std::unordered_set<std::size_t> members;
  for (const auto& c : cycles) {
    members.insert(index.index(c));
    out.c_min = meet(out.c_min, c);
    out.c_max = join(out.c_max, c);
  }
  for (std::size_t a = 0; a < cycles.size() && out.closed; ++a) {
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      if (!members.count(index.index(meet(cycles[a], cycles[b]))) ||
          !members.count(index.index(join(cycles[a], cycles[b])))) {
        out.closed = false;
        break;
      }
    }
  }
  return out;
}

RecipeCheck check_recipe(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const Limits& limits) {
  require_at_least_reduced(G, Z);
  RecipeCheck rc;
  const QCycle shift = minus_lprime(G, lp);
  rc.t_Z = codim_generic(G, Z, lp, limits).codim;
  rc.chi_minus_lprime = chi(G, shift);
  rc.min_shifted = min_chi_effective(G, shift, Positivity::NonNegative, limits).value;
  rc.a = Rational(rc.t_Z) >= rc.chi_minus_lprime - rc.min_shifted + 2;

  const auto m = min_chi_effective(G, QCycle(G.size()), Positivity::Positive, limits);
  rc.min_chi = static_cast<std::int64_t>(boost::multiprecision::numerator(m.value));
  if (m.unique_max) rc.max_M = m.max_minimizer;
  if (rc.max_M) {
    rc.b = true;
    for (std::size_t v = 0; v < G.size(); ++v)
      if (shift[v] > (*rc.max_M)[v]) rc.b = false;
  }
  return rc;
}

std::int64_t twisted_h1_lower_bound(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const Cycle& l,
                                    const Limits& limits) {
  require_effective(G, l);
  // chi(-l'-l) - chi(-l') = chi(-l) - (l', l)
  const std::int64_t t_Z = codim_generic(G, Z, lp, limits).codim;
  return t_Z + chi(G, -1 * l) - lprime_pairing(lp, l);
}

std::int64_t twisted_h1_lower_bound_self(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                                         const Limits& limits) {
  const Cycle l = minus_lprime(G, lp).to_cycle();
  return twisted_h1_lower_bound(G, Z, lp, l, limits);
}

BoundReport bound_report(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const Limits& limits) {
  BoundReport r;
  r.h1 = h1_generic(G, Z);
  r.d = d_generic(G, Z, lp, DMethod::PerSupport, limits);
  r.t_Z = codim_generic(G, Z, lp, limits).codim;
  r.codim = r.h1 - r.d;
  r.T = bound_T(G, Z, lp);
  r.t = bound_t(G, Z, lp, limits);
  r.dominant = is_dominant(G, Z, lp);
  r.constant = r.d == 0;
  if (r.codim != r.t_Z) fail(ErrorCode::CrossCheckFailed, "codim differs from t_Z");
  if (r.t != r.t_Z) fail(ErrorCode::CrossCheckFailed, "t differs from t_Z");
  if (r.T > r.t) fail(ErrorCode::CrossCheckFailed, "T exceeds t");
  if (r.dominant != (r.codim == 0)) fail(ErrorCode::CrossCheckFailed, "dominance disagrees with codim");
  return r;
}

OracleDimResult d_from_h1(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const H1Function& h1,
                          const Limits& limits) {
  require_at_least_reduced(G, Z);
  validate(G, lp);
  (void)detail::checked_index(Z, limits);
  const std::int64_t hZ = h1(Z);
  OracleDimResult r;
  r.d = std::numeric_limits<std::int64_t>::max();
  r.codim = std::numeric_limits<std::int64_t>::min();
  detail::BoxIterator it(Cycle(G.size()), Z);
  do {
    const Cycle& z1 = it.point();
    const auto h = h1(z1);
    const auto pair = lprime_pairing(lp, z1);
    if (pair + hZ - h < r.d) {
      r.d = pair + hZ - h;
      r.witness = z1;
    }
    r.codim = std::max(r.codim, h - pair);
  } while (it.next());
  return r;
}

}  // namespace abeldim
