#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "abeldim/chi_opt.hpp"
#include "abeldim/lattice.hpp"
#include "abeldim/limits.hpp"

namespace abeldim {

// h^1(O_{Z'}) for the generic analytic structure: sum over the connected
// components C of |Z'| of 1 - min{chi(l) : E_C <= l <= Z'|_C}.
std::int64_t h1_generic(const PlumbingGraph& G, const Cycle& Zp);

// chi(-l') < chi(-l'+l) for every 0 < l <= Z. Z only needs to be effective.
bool is_dominant(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp);

// h1(Z) - h1(Z|_{V \ I}).
std::int64_t e_Z_of_I(const PlumbingGraph& G, const Cycle& Z, const VertexSet& I);
// With I the E*-support of l'.
std::int64_t e_Z(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp);

enum class DMethod {
  Direct,  // every 0 <= Z1 <= Z, inner minimum over E_{|Z1|} <= l <= Z1
  PerSupport,  // min over Z1 of (l', Z1) + h1(Z) - h1(Z1), one cut per support
};

std::int64_t d_generic(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, DMethod method,
                       const Limits& limits = default_limits());

struct CodimResult {
  std::int64_t codim = 0;
  // A minimal-support maximizer Z1 of -(l', Z1) - chi(Z1) + chi(E_{|Z1|}).
  Cycle witness;
};

// max over 0 <= Z1 <= Z of -(l', Z1) - chi(Z1) + chi(E_{|Z1|}), by support
// enumeration with per-connected-component weights memoized.
CodimResult codim_generic(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                          const Limits& limits = default_limits());

// The objective above at one cycle Z1.
std::int64_t codim_objective(const PlumbingGraph& G, const EStarCombination& lp, const Cycle& Z1);

// T(Zc, l') = chi(-l') - min_{0<=l<=Zc} chi(-l'+l) + D, D = 0 iff dominant on
// Zc. Throws DisconnectedSupport unless |Zc| is nonempty and connected.
std::int64_t bound_T(const PlumbingGraph& G, const Cycle& Zc, const EStarCombination& lp);

// t(Z, l') = max over 0 < Z' <= Z of the sum of T over the components of Z'.
// The default route restricts to component-wise cycles realizing their own
// box minimum; the brute route evaluates every Z'.
std::int64_t bound_t(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                     const Limits& limits = default_limits());
std::int64_t bound_t_brute(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                           const Limits& limits = default_limits());

struct MinimizerPair {
  Cycle c_min;
  Cycle c_max;
  std::int64_t value = 0;          // min of (l', Z1) + h1(Z) - h1(Z1), i.e. d
  std::size_t minimizer_count = 0;
  bool closed = true;              // minimizer set closed under min and max
};

MinimizerPair structure_cycles(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                               const Limits& limits = default_limits());

struct RecipeCheck {
  bool a = false;
  bool b = false;
  std::int64_t t_Z = 0;
  Rational chi_minus_lprime;      // chi(-l')
  Rational min_shifted;           // min over l >= 0 of chi(-l'+l)
  std::int64_t min_chi = 0;       // min over l > 0 of chi(l)
  std::optional<Cycle> max_M;     // max of the set of minimizers of chi over l > 0
};

RecipeCheck check_recipe(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                         const Limits& limits = default_limits());

// t_Z(l') - chi(-l') + chi(-l'-l), for l > 0.
std::int64_t twisted_h1_lower_bound(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                                    const Cycle& l, const Limits& limits = default_limits());
// The case l = -l', which must be an integral cycle (else NonIntegralShift).
std::int64_t twisted_h1_lower_bound_self(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                                         const Limits& limits = default_limits());

struct BoundReport {
  std::int64_t h1 = 0;
  std::int64_t d = 0;
  std::int64_t codim = 0;
  std::int64_t T = 0;
  std::int64_t t = 0;
  std::int64_t t_Z = 0;
  bool dominant = false;
  bool constant = false;  // d == 0
};

// Computes every field and throws CrossCheckFailed when d + codim != h1,
// t != t_Z, T > t or codim < t_Z.
BoundReport bound_report(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp,
                         const Limits& limits = default_limits());

// Any h^1 evaluator on sub-cycles 0 <= Z1 <= Z.
using H1Function = std::function<std::int64_t(const Cycle&)>;

struct OracleDimResult {
  std::int64_t d = 0;      // min over Z1 of (l', Z1) + H(Z) - H(Z1)
  std::int64_t codim = 0;  // max over Z1 of H(Z1) - (l', Z1)
  Cycle witness;           // a minimizer of the first expression
};

// Enumerates every 0 <= Z1 <= Z. Throws BoxTooLarge.
OracleDimResult d_from_h1(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp, const H1Function& h1,
                          const Limits& limits = default_limits());

void require_at_least_reduced(const PlumbingGraph& G, const Cycle& Z);

}  // namespace abeldim
