#pragma once

#include <cstdint>
#include <vector>

#include "abeldim/lattice.hpp"
#include "abeldim/limits.hpp"
#include "box_iter.hpp"

namespace abeldim::detail {

// Throws BoxTooLarge when [0, Z] has more points than the cap.
BoxIndex checked_index(const Cycle& Z, const Limits& limits);

// M(Z1) = min{chi(l) : E_{|Z1|} <= l <= Z1} for every 0 <= Z1 <= Z; M(0) = 0.
std::vector<std::int64_t> support_min_chi(const PlumbingGraph& G, const BoxIndex& index);

// chi(E_{|Z1|}), the number of components of |Z1|, for every point.
std::vector<std::int64_t> component_counts(const PlumbingGraph& G, const BoxIndex& index);

// Generic h^1 at every point, from the two tables above.
std::vector<std::int64_t> h1_table(const PlumbingGraph& G, const BoxIndex& index);

// P(Z') = min over 0 <= l <= Z' and Q(Z') = min over 0 < l <= Z' of
// chi(l) + sum lambda_v l_v (Q(0) = INT64_MAX).
void prefix_minima(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const BoxIndex& index,
                   std::vector<std::int64_t>& P, std::vector<std::int64_t>& Q);

}  // namespace abeldim::detail
