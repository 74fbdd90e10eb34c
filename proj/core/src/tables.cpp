#include "tables.hpp"

#include <algorithm>
#include <limits>

#include "abeldim/chi_opt.hpp"
#include "abeldim/error.hpp"

namespace abeldim::detail {

BoxIndex checked_index(const Cycle& Z, const Limits& limits) {
  if (!Z.is_effective()) fail(ErrorCode::InvalidArgument, "cycle must be effective");
  const Box box{Cycle(Z.size()), Z};
  if (box.volume() > limits.max_box_volume)
    fail(ErrorCode::BoxTooLarge, "box [0, Z] has more than " + std::to_string(limits.max_box_volume) + " points");
  return BoxIndex(Z);
}

std::vector<std::int64_t> support_min_chi(const PlumbingGraph& G, const BoxIndex& index) {
  std::vector<std::int64_t> M(index.volume(), 0);
  BoxIterator it(Cycle(G.size()), index.upper());
  std::size_t i = 0;
  do {
    const Cycle& z = it.point();
    if (!z.is_zero()) {
      std::int64_t best = chi(G, z);
      for (std::size_t v = 0; v < z.size(); ++v)
        if (z[v] >= 2) best = std::min(best, M[i - index.stride(v)]);
      M[i] = best;
    }
    ++i;
  } while (it.next());
  return M;
}

std::vector<std::int64_t> component_counts(const PlumbingGraph& G, const BoxIndex& index) {
  std::vector<std::int64_t> c(index.volume(), 0);
  BoxIterator it(Cycle(G.size()), index.upper());
  std::size_t i = 0;
  do {
    const Cycle& z = it.point();
    std::int64_t count = 0;
    for (std::size_t v = 0; v < z.size(); ++v) count += z[v] > 0 ? 1 : 0;
    for (auto [v, w] : G.edges()) count -= (z[v] > 0 && z[w] > 0) ? 1 : 0;
    c[i++] = count;
  } while (it.next());
  return c;
}

std::vector<std::int64_t> h1_table(const PlumbingGraph& G, const BoxIndex& index) {
  auto M = support_min_chi(G, index);
  const auto comps = component_counts(G, index);
  for (std::size_t i = 0; i < M.size(); ++i) M[i] = comps[i] - M[i];
  return M;
}

void prefix_minima(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const BoxIndex& index,
                   std::vector<std::int64_t>& P, std::vector<std::int64_t>& Q) {
  constexpr auto kNone = std::numeric_limits<std::int64_t>::max();
  P.assign(index.volume(), 0);
  Q.assign(index.volume(), kNone);
  BoxIterator it(Cycle(G.size()), index.upper());
  std::size_t i = 0;
  do {
    const Cycle& z = it.point();
    if (!z.is_zero()) {
      const auto g = linear_objective(G, lambda, z);
      std::int64_t p = g;
      std::int64_t q = g;
      for (std::size_t v = 0; v < z.size(); ++v) {
        if (z[v] < 1) continue;
        p = std::min(p, P[i - index.stride(v)]);
        q = std::min(q, Q[i - index.stride(v)]);
      }
      P[i] = p;
      Q[i] = q;
    }
    ++i;
  } while (it.next());
}

}  // namespace abeldim::detail
