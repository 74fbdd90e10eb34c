#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abeldim/lattice.hpp"
#include "abeldim/limits.hpp"

namespace abeldim {

struct Box {
  Cycle lower;
  Cycle upper;

  // Number of integer points, saturating at UINT64_MAX.
  std::uint64_t volume() const;
};

// Throws EmptyBox when lower is not componentwise <= upper.
void validate(const PlumbingGraph& G, const Box& box);

struct MinChiResult {
  Rational value;
  Cycle min_minimizer;
  Cycle max_minimizer;
  // False when the minimizer set has several minimal (resp. maximal)
  // elements; only possible for the strictly positive cone, where the set
  // is not closed under componentwise min/max. The reported cycle is then
  // one of them (smallest total, then lexicographic).
  bool unique_min = true;
  bool unique_max = true;
};

// Minimum of l -> chi(l) + sum_v lambda_v l_v over a box; everything integral.
struct LinearMinResult {
  std::int64_t value = 0;
  Cycle min_minimizer;
  Cycle max_minimizer;
};

// lambda_v = -(shift, E_v). Throws NonIntegralShift when shift is not in L'.
std::vector<std::int64_t> shift_linear_term(const PlumbingGraph& G, const QCycle& shift);
std::vector<std::int64_t> shift_linear_term(const PlumbingGraph& G, const EStarCombination& minus_lp);

// chi(l) + sum lambda_v l_v.
std::int64_t linear_objective(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const Cycle& l);

Cycle laufer_fundamental_cycle(const PlumbingGraph& G);

// Exact minimum via one s-t minimum cut on the unary (threshold) encoding.
// Minimal and maximal minimizers come from the two extreme cuts.
LinearMinResult min_chi_linear(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const Box& box);

// Exhaustive enumeration. Optionally collects every minimizer.
LinearMinResult brute_min_chi_linear(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const Box& box,
                                     std::vector<Cycle>* minimizers = nullptr,
                                     const Limits& limits = default_limits());

// Minimum of l -> chi(shift + l) over the box.
MinChiResult min_chi_box(const PlumbingGraph& G, const QCycle& shift, const Box& box);
MinChiResult brute_min_chi_box(const PlumbingGraph& G, const QCycle& shift, const Box& box,
                               std::vector<Cycle>* minimizers = nullptr,
                               const Limits& limits = default_limits());

enum class Positivity { NonNegative, Positive };

// Minimum over nonzero l in [0, upper]; see MinChiResult for uniqueness.
LinearMinResult min_chi_positive(const PlumbingGraph& G, const std::vector<std::int64_t>& lambda, const Cycle& upper,
                                 bool* unique_min = nullptr, bool* unique_max = nullptr);

// Componentwise max(2 ceil(Z_K), 4 Z_min).
Cycle default_cap(const PlumbingGraph& G);

struct EffectiveMinResult : MinChiResult {
  Cycle cap;   // the box [0, cap] on which the result stabilized
  int rounds = 0;
};

// Global minimum over the effective cone (or its nonzero part), by box
// doubling from default_cap until two consecutive rounds agree on value and
// both extremal minimizers. Throws NoConvergence.
EffectiveMinResult min_chi_effective(const PlumbingGraph& G, const QCycle& shift, Positivity positivity,
                                     const Limits& limits = default_limits());

struct MaxMinimizerReport {
  std::int64_t value = 0;         // min of chi over nonzero l <= bound
  std::optional<Cycle> max;       // max of the minimizer set, if it exists
  std::optional<Cycle> max_cut;   // from the extreme minimum cut(s)
  std::optional<Cycle> max_bfs;   // from the equal-chi walk
  std::optional<Cycle> max_brute; // from exhaustive enumeration
  std::size_t bfs_visited = 0;
  bool brute_checked = false;
  bool agree = true;
};

// Maximal element of {0 < l <= bound : chi(l) = min}. Computed from the
// extreme cuts and from a walk over chi-preserving +-E_v moves; when the box
// volume allows, also by enumeration. Disagreement is reported, not thrown.
MaxMinimizerReport max_of_minimizer_set(const PlumbingGraph& G, const Cycle& bound, bool brute_check = true,
                                        const Limits& limits = default_limits());

}  // namespace abeldim
