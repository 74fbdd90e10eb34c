#include <gtest/gtest.h>

#include "abeldim/error.hpp"
#include "abeldim/examples.hpp"
#include "abeldim/generic_invariants.hpp"
#include "oracles.hpp"

using namespace abeldim;

namespace {

const std::vector<oracle::Instance>& small_corpus() {
  static const auto c = oracle::corpus(31, 60, 30);
  return c;
}

Cycle restricted_off(const PlumbingGraph& G, const Cycle& Z, const EStarCombination& lp) {
  return restrict(Z, complement(G.size(), estar_support(lp)));
}

}  // namespace

TEST(GenericH1, MatchesEnumeration) {
  for (const auto& in : small_corpus()) {
    EXPECT_EQ(h1_generic(in.G, in.Z), oracle::h1(in.G, in.Z.coeffs())) << oracle::describe(in);
    const auto off = restricted_off(in.G, in.Z, in.lp);
    EXPECT_EQ(h1_generic(in.G, off), oracle::h1(in.G, off.coeffs())) << oracle::describe(in);
  }
}

TEST(GenericH1, DisconnectedSupportAddsUp) {
  const auto G = build_graph(GraphSpec{{{"a", -1}, {"b", -3}, {"c", -2}, {"d", -7}},
                                       {{"a", "b"}, {"a", "c"}, {"a", "d"}}});
  const Cycle Z(std::vector<std::int64_t>{0, 3, 2, 1});
  EXPECT_EQ(h1_generic(G, Z), oracle::h1(G, Z.coeffs()));
  EXPECT_EQ(h1_generic(G, Cycle(G.size())), 0);
}

TEST(Dominance, MatchesDefinition) {
  for (const auto& in : small_corpus())
    EXPECT_EQ(is_dominant(in.G, in.Z, in.lp), oracle::dominant(in.G, in.Z, in.lp)) << oracle::describe(in);
}

TEST(Dimension, AllRoutesMatchEnumeration) {
  for (const auto& in : small_corpus()) {
    const auto ref = oracle::dim(in.G, in.Z, in.lp);
    EXPECT_EQ(d_generic(in.G, in.Z, in.lp, DMethod::Direct), ref.d) << oracle::describe(in);
    EXPECT_EQ(d_generic(in.G, in.Z, in.lp, DMethod::PerSupport), ref.d) << oracle::describe(in);
    const auto c = codim_generic(in.G, in.Z, in.lp);
    EXPECT_EQ(c.codim, ref.codim) << oracle::describe(in);
    EXPECT_EQ(codim_objective(in.G, in.lp, c.witness), c.codim);
    EXPECT_TRUE(leq(c.witness, in.Z));
    const auto r = d_from_h1(in.G, in.Z, in.lp, [&](const Cycle& z) { return oracle::h1(in.G, z.coeffs()); });
    EXPECT_EQ(r.d, ref.d);
  }
}

TEST(Dimension, ZeroClassHasZeroDimension) {
  for (const auto& in : small_corpus()) {
    const EStarCombination zero{std::vector<std::int64_t>(in.G.size(), 0)};
    EXPECT_EQ(d_generic(in.G, in.Z, zero, DMethod::Direct), 0);
    EXPECT_EQ(codim_generic(in.G, in.Z, zero).codim, h1_generic(in.G, in.Z));
  }
}

TEST(Dimension, ConstantIffNoH1Drop) {
  for (const auto& in : small_corpus()) {
    const auto d = d_generic(in.G, in.Z, in.lp, DMethod::Direct);
    const auto e = e_Z(in.G, in.Z, in.lp);
    EXPECT_EQ(e, oracle::h1(in.G, in.Z.coeffs()) - oracle::h1(in.G, restricted_off(in.G, in.Z, in.lp).coeffs()));
    EXPECT_EQ(d == 0, e == 0) << oracle::describe(in);
    EXPECT_LE(d, e);
  }
}

TEST(Bounds, TAndTAgree) {
  for (const auto& in : small_corpus()) {
    const auto codim = codim_generic(in.G, in.Z, in.lp).codim;
    const auto t = bound_t(in.G, in.Z, in.lp);
    EXPECT_EQ(t, codim) << oracle::describe(in);
    EXPECT_EQ(bound_t_brute(in.G, in.Z, in.lp), t) << oracle::describe(in);
    EXPECT_LE(bound_T(in.G, in.Z, in.lp), t);
    EXPECT_EQ(is_dominant(in.G, in.Z, in.lp), codim == 0);
    EXPECT_NO_THROW(bound_report(in.G, in.Z, in.lp));
  }
}

TEST(Bounds, TNeedsConnectedSupport) {
  const auto G = build_graph(GraphSpec{{{"a", -2}, {"b", -2}, {"c", -2}}, {{"a", "b"}, {"b", "c"}}});
  const EStarCombination lp{{1, 0, 0}};
  try {
    bound_T(G, Cycle(std::vector<std::int64_t>{1, 0, 1}), lp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DisconnectedSupport);
  }
}

TEST(Structure, MinimizersFormALattice) {
  for (const auto& in : small_corpus()) {
    const auto s = structure_cycles(in.G, in.Z, in.lp);
    const auto ref = oracle::dim(in.G, in.Z, in.lp);
    EXPECT_EQ(s.value, ref.d);
    EXPECT_TRUE(s.closed) << oracle::describe(in);
    EXPECT_TRUE(leq(s.c_min, s.c_max));
    const auto hz = oracle::h1(in.G, in.Z.coeffs());
    for (const auto* c : {&s.c_min, &s.c_max})
      EXPECT_EQ(oracle::lp_pair(in.lp, c->coeffs()) + hz - oracle::h1(in.G, c->coeffs()), ref.d);
  }
}

TEST(Inputs, ZMustDominateReducedCycle) {
  const auto G = build_graph(GraphSpec{{{"a", -2}, {"b", -2}}, {{"a", "b"}}});
  EXPECT_THROW(require_at_least_reduced(G, Cycle(std::vector<std::int64_t>{1, 0})), Error);
  EXPECT_NO_THROW(require_at_least_reduced(G, Cycle(std::vector<std::int64_t>{1, 3})));
}

TEST(Inputs, SupportEnumerationCap) {
  GraphSpec spec;
  for (int i = 0; i < 22; ++i) spec.vertices.push_back({"v" + std::to_string(i), -2});
  for (int i = 1; i < 22; ++i) spec.edges.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
  const auto G = build_graph(spec);
  EStarCombination lp{std::vector<std::int64_t>(22, 0)};
  lp.a[0] = 1;
  try {
    codim_generic(G, Cycle::reduced(22), lp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SupportEnumerationTooLarge);
  }
}

TEST(TwinGamma, RecipeAndTwistedBound) {
  const auto ex = twin_gamma(30);
  const auto& G = ex.graph;
  const auto Z = default_cap(G);
  EXPECT_EQ(h1_generic(G, Z), 6);
  const auto rc = check_recipe(G, Z, ex.lprime);
  EXPECT_TRUE(rc.a);
  EXPECT_TRUE(rc.b);
  EXPECT_EQ(rc.chi_minus_lprime, -3);
  EXPECT_EQ(rc.min_chi, -5);
  const auto c = codim_generic(G, Z, ex.lprime);
  EXPECT_EQ(c.codim, 4);
  EXPECT_EQ(twisted_h1_lower_bound_self(G, Z, ex.lprime), 7);
  EXPECT_EQ(bound_T(G, Z, ex.lprime), 3);
  EXPECT_FALSE(is_dominant(G, Z, ex.lprime));
}
