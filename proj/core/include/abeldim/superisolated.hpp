#pragma once

#include <cstdint>

#include "abeldim/pattern_engine.hpp"

// Closed forms for superisolated hypersurface singularities of degree d,
// with -l' = k E_0^* and a twist -l'_0 = k0 E_0^*. Everything reduces to
// counting monomials m in three variables.
namespace abeldim::si {

std::int64_t binomial(std::int64_t n, std::int64_t k);

// d(d-1)(d-2)/6, checked against #{m : |m| <= d-3}.
std::int64_t pg(std::int64_t d);

// #{m : d-2-s <= |m| <= d-3}, checked against pg - C(d-s, 3). Needs 0 <= s <= d-2.
std::int64_t gs(std::int64_t d, std::int64_t s);

// min_{0<=s<=d-2} {ks + C(d-s,3)}, checked against sum_{j<=d-3} min{k, C(j+2,2)}.
std::int64_t dim(std::int64_t d, std::int64_t k);
std::int64_t dim_min_form(std::int64_t d, std::int64_t k);
std::int64_t dim_sum_form(std::int64_t d, std::int64_t k);

// min_{0<=s<=d-2} {ks + sum_{j=0}^{d-3-s} max{0, C(j+2,2) - k0}}.
std::int64_t twisted_dim(std::int64_t d, std::int64_t k, std::int64_t k0);

// h^1(O_Z) - g_s, resp. its twisted analogue, as a test function on one block
// of k entries bounded by d-2. Depends on the block minimum only; an empty
// block (k = 0) reads as s = d-2.
TestFunction test_function(std::int64_t d, std::int64_t k, std::int64_t k0 = 0);

// closed_form_min of test_function at s = 0.
std::int64_t engine_dim(std::int64_t d, std::int64_t k, std::int64_t k0 = 0);

}  // namespace abeldim::si
