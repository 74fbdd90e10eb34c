#include "abeldim/superisolated.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "abeldim/error.hpp"

namespace abeldim::si {

namespace {

void require_degree(std::int64_t d) {
  if (d < 3) fail(ErrorCode::InvalidArgument, "degree must be at least 3, got " + std::to_string(d));
  if (d > 2000) fail(ErrorCode::InvalidArgument, "degree too large");
}

void require_nonnegative(std::int64_t x, const char* name) {
  if (x < 0) fail(ErrorCode::InvalidArgument, std::string(name) + " must be nonnegative");
}

// Monomials of degree j in three variables.
std::int64_t monomials(std::int64_t j) { return binomial(j + 2, 2); }

// sum_{j=0}^{top} max{0, C(j+2,2) - k0}
std::int64_t twisted_h1(std::int64_t top, std::int64_t k0) {
  std::int64_t sum = 0;
  for (std::int64_t j = 0; j <= top; ++j) sum += std::max<std::int64_t>(0, monomials(j) - k0);
  return sum;
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t pg(std::int64_t d) {
  require_degree(d);
  const std::int64_t closed = d * (d - 1) * (d - 2) / 6;
  std::int64_t count = 0;
  for (std::int64_t j = 0; j <= d - 3; ++j) count += monomials(j);
  if (count != closed) fail(ErrorCode::CrossCheckFailed, "p_g monomial count disagrees with d(d-1)(d-2)/6");
  return closed;
}

std::int64_t gs(std::int64_t d, std::int64_t s) {
  require_degree(d);
  if (s < 0 || s > d - 2) fail(ErrorCode::SOutOfRange, "s must lie in [0, d-2]");
  std::int64_t count = 0;
  for (std::int64_t j = d - 2 - s; j <= d - 3; ++j) count += monomials(j);
  if (pg(d) - count != binomial(d - s, 3)) fail(ErrorCode::CrossCheckFailed, "p_g - g_s != C(d-s, 3)");
  return count;
}

std::int64_t dim_min_form(std::int64_t d, std::int64_t k) {
  require_degree(d);
  require_nonnegative(k, "k");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t s = 0; s <= d - 2; ++s) best = std::min(best, k * s + binomial(d - s, 3));
  return best;
}

std::int64_t dim_sum_form(std::int64_t d, std::int64_t k) {
  require_degree(d);
  require_nonnegative(k, "k");
  std::int64_t sum = 0;
  for (std::int64_t j = 0; j <= d - 3; ++j) sum += std::min(k, monomials(j));
  return sum;
}

std::int64_t dim(std::int64_t d, std::int64_t k) {
  const auto a = dim_min_form(d, k);
  if (a != dim_sum_form(d, k)) fail(ErrorCode::CrossCheckFailed, "the two closed forms disagree");
  return a;
}

std::int64_t twisted_dim(std::int64_t d, std::int64_t k, std::int64_t k0) {
  require_degree(d);
  require_nonnegative(k, "k");
  require_nonnegative(k0, "k0");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t s = 0; s <= d - 2; ++s) best = std::min(best, k * s + twisted_h1(d - 3 - s, k0));
  return best;
}

TestFunction test_function(std::int64_t d, std::int64_t k, std::int64_t k0) {
  require_degree(d);
  require_nonnegative(k, "k");
  require_nonnegative(k0, "k0");
  IndexShape shape({k});
  std::vector<std::int64_t> bound;
  if (k > 0) bound.push_back(d - 2);
  auto oracle = [d, k0](const MultiIndex& s) {
    const std::int64_t m = s.empty() ? d - 2 : *std::min_element(s.begin(), s.end());
    return twisted_h1(d - 3 - m, k0);
  };
  return TestFunction(k0 == 0 ? "superisolated" : "superisolated-twisted", shape, bound, oracle, true);
}

std::int64_t engine_dim(std::int64_t d, std::int64_t k, std::int64_t k0) {
  const auto tau = test_function(d, k, k0);
  return closed_form_min(tau, MultiIndex(tau.shape().entries(), 0));
}

}  // namespace abeldim::si
