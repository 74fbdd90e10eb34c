#include <gtest/gtest.h>

#include <random>

#include "abeldim/error.hpp"
#include "abeldim/pattern_engine.hpp"
#include "abeldim/superisolated.hpp"
#include "oracles.hpp"

using namespace abeldim;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

// Tower by repeated generic blow-ups: for each entry s_{v,k} >= 1, blow up a
// generic point of E_v, then a generic point of the new curve, s times.
struct IteratedTower {
  PlumbingGraph graph;
  std::vector<Cycle> pullback;  // images of E_u of the base graph
};

IteratedTower iterate(const PlumbingGraph& G, const EStarCombination& lp, const MultiIndex& s) {
  IteratedTower t{G, {}};
  for (std::size_t u = 0; u < G.size(); ++u) t.pullback.push_back(Cycle::basis(G.size(), u));
  const IndexShape shape(lp.a);
  for (std::size_t b = 0; b < shape.blocks(); ++b) {
    const auto v = shape.block_vertex(b);
    for (std::size_t i = shape.block_begin(b); i < shape.block_end(b); ++i) {
      std::size_t at = v;
      for (std::int64_t step = 1; step <= s[i]; ++step) {
        const auto id = "F(" + G.id(v) + "," + std::to_string(i - shape.block_begin(b) + 1) + "," +
                        std::to_string(step) + ")";
        auto [H, map] = blow_up_generic(t.graph, at, id);
        for (auto& c : t.pullback) c = map.pull(c);
        t.graph = H;
        at = map.new_vertex;
      }
    }
  }
  return t;
}

}  // namespace

TEST(Shape, BlocksAndCanonicalForm) {
  const IndexShape shape({2, 0, 3});
  EXPECT_EQ(shape.blocks(), 2u);
  EXPECT_EQ(shape.entries(), 5u);
  EXPECT_EQ(shape.block_vertex(1), 2u);
  EXPECT_EQ(shape.block_of(1), 0u);
  EXPECT_EQ(shape.block_of(2), 1u);
  EXPECT_EQ(canonical(shape, {3, 1, 2, 0, 1}), (MultiIndex{1, 3, 0, 1, 2}));
  EXPECT_EQ(norm({1, 3, 0, 1, 2}), 7);
  EXPECT_EQ(block_minima(shape, {1, 3, 2, 0, 1}), (std::vector<std::int64_t>{1, 0}));
  EXPECT_THROW(IndexShape({-1}), Error);
}

TEST(TestFunctionCache, ClampsCanonicalizesAndMemoizes) {
  int calls = 0;
  TestFunction tau("t", IndexShape({2}), {3}, [&](const MultiIndex& s) {
    ++calls;
    return s[0] * 10 + s[1];
  }, false);
  EXPECT_EQ(tau({5, 1}), 13);
  EXPECT_EQ(tau({1, 3}), 13);
  EXPECT_EQ(tau({1, 9}), 13);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(tau.evaluations(), 1u);
  EXPECT_EQ(tau.top(), (MultiIndex{3, 3}));
  EXPECT_EQ(code_of([&] { tau({-1, 0}); }), ErrorCode::SOutOfRange);
  const TestFunction copy = tau;
  EXPECT_EQ(copy({3, 1}), 13);
  EXPECT_EQ(calls, 1);
}

TEST(Tower, MatchesIteratedBlowUps) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (const auto& in : oracle::corpus(42, 40, 20)) {
    if (in.lp.is_zero()) continue;
    const auto m = stabilization_bound(in.G, in.lp);
    const IndexShape shape(in.lp.a);
    MultiIndex s(shape.entries());
    for (std::size_t i = 0; i < s.size(); ++i)
      s[i] = std::uniform_int_distribution<std::int64_t>(0, m[shape.block_vertex(shape.block_of(i))])(rng);
    const auto t = build_tower(in.G, in.Z, in.lp, s);
    const auto ref = iterate(in.G, in.lp, t.s);
    ASSERT_EQ(t.graph.size(), ref.graph.size());
    for (std::size_t v = 0; v < t.graph.size(); ++v) {
      const auto w = ref.graph.index_of(t.graph.id(v));
      EXPECT_EQ(t.graph.self_intersection(v), ref.graph.self_intersection(w));
      for (std::size_t x = 0; x < t.graph.size(); ++x)
        EXPECT_EQ(t.graph.intersection(v, x), ref.graph.intersection(w, ref.graph.index_of(t.graph.id(x))));
    }
    auto remap = [&](const Cycle& c) {
      Cycle out(t.graph.size());
      for (std::size_t v = 0; v < t.graph.size(); ++v) out[v] = c[ref.graph.index_of(t.graph.id(v))];
      return out;
    };
    Cycle zpull(t.graph.size());
    for (std::size_t u = 0; u < in.G.size(); ++u) {
      EXPECT_EQ(t.pullback[u], remap(ref.pullback[u]));
      zpull += in.Z[u] * remap(ref.pullback[u]);
    }
    EXPECT_EQ(t.Z, zpull);
    EXPECT_EQ(t.lprime.total(), in.lp.total());
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Tower, ZeroTupleIsTheBaseGraph) {
  const auto in = oracle::corpus(43, 1, 0).front();
  EStarCombination lp{std::vector<std::int64_t>(in.G.size(), 0)};
  lp.a[0] = 2;
  const auto t = build_tower(in.G, in.Z, lp, {0, 0});
  EXPECT_EQ(t.graph.size(), in.G.size());
  EXPECT_EQ(t.lprime.a, lp.a);
  EXPECT_EQ(t.Z, in.Z);
}

TEST(LsCycle, EmptyBlocksKeepZ) {
  const auto G = build_graph(GraphSpec{{{"a", -2}, {"b", -3}, {"c", -2}}, {{"a", "b"}, {"b", "c"}}});
  const Cycle Z(std::vector<std::int64_t>{3, 4, 5});
  const EStarCombination lp{{2, 0, 1}};
  EXPECT_EQ(l_s_cycle(G, Z, lp, {0, 2, 1}), Cycle(std::vector<std::int64_t>{0, 4, 1}));
  EXPECT_EQ(l_s_cycle(G, Z, lp, {4, 7, 9}), Z);
  EXPECT_EQ(l_s_cycle(G, Z, lp, {0, 0, 0}), restrict(Z, VertexSet{1}));
}

TEST(TestFunctions, SandwichMonotonicityAndEndPoints) {
  for (const auto& in : oracle::corpus(44, 40, 25)) {
    const auto first = test_first(in.G, in.Z, in.lp);
    const auto second = test_second(in.G, in.Z, in.lp);
    const auto T1 = run_pattern_induction(first);
    const auto zero = MultiIndex(first.shape().entries(), 0);
    const auto d = d_generic(in.G, in.Z, in.lp, DMethod::Direct);
    EXPECT_EQ(T1.at(first.shape(), zero), d) << oracle::describe(in);
    EXPECT_EQ(first(zero), e_Z(in.G, in.Z, in.lp));
    EXPECT_EQ(second(zero), e_Z(in.G, in.Z, in.lp));
    EXPECT_EQ(first(first.top()), 0) << oracle::describe(in);
    for (const auto& [s, ds] : T1.d) {
      const auto e = first(s);
      EXPECT_LE(ds, e);
      EXPECT_LE(e, second(s)) << oracle::describe(in);
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto t = s;
        ++t[i];
        EXPECT_LE(first(t), e);
      }
    }
  }
}

TEST(Induction, MatchesClosedFormForSuperisolatedOracle) {
  for (std::int64_t d = 3; d <= 7; ++d) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      const auto tau = si::test_function(d, k);
      const auto table = run_pattern_induction(tau);
      for (const auto& [s, v] : table.d) EXPECT_EQ(v, closed_form_min(tau, s));
      EXPECT_EQ(table.at(tau.shape(), MultiIndex(k, 0)), si::dim(d, k));
      EXPECT_EQ(table.provenance, "superisolated");
    }
  }
}

TEST(Induction, FullEnumerationClosedFormMatchesMinOnlyPath) {
  const auto fast = si::test_function(6, 2, 1);
  TestFunction slow("slow", fast.shape(), fast.bound(), [&](const MultiIndex& s) { return fast(s); }, false);
  const auto top = fast.top();
  oracle::for_box(std::vector<std::int64_t>(2, 0), top, [&](const std::vector<std::int64_t>& s) {
    EXPECT_EQ(closed_form_min(fast, s), closed_form_min(slow, s));
  });
}

TEST(Induction, RejectsInconsistentOracles) {
  const std::vector<std::int64_t> values{0, 3, 3, 3};
  TestFunction bad("bad", IndexShape({1}), {3}, [&](const MultiIndex& s) { return values[s[0]]; }, false);
  EXPECT_EQ(code_of([&] { run_pattern_induction(bad); }), ErrorCode::InconsistentOracle);

}

TEST(Induction, GridCap) {
  Limits tiny;
  tiny.max_grid_points = 10;
  const auto tau = si::test_function(12, 3);
  EXPECT_EQ(code_of([&] { run_pattern_induction(tau, tiny); }), ErrorCode::GridTooLarge);
}

TEST(Twisted, ImageOracleWithTrivialTwistIsUntwisted) {
  for (const auto& in : oracle::corpus(45, 30, 15)) {
    const EStarCombination zero{std::vector<std::int64_t>(in.G.size(), 0)};
    const auto r = twisted_d(in.G, in.Z, in.lp, zero, TwistOracle::GenericImage);
    EXPECT_EQ(r.d, d_generic(in.G, in.Z, in.lp, DMethod::Direct)) << oracle::describe(in);
  }
}

TEST(Twisted, BundleOracleMatchesEnumeration) {
  int dominant = 0;
  for (const auto& in : oracle::corpus(46, 40, 20)) {
    EStarCombination lp0{std::vector<std::int64_t>(in.G.size(), 0)};
    for (std::size_t v = 0; v < in.G.size(); ++v) lp0.a[v] = (v % 2 == 0) ? 2 : 1;
    if (!is_dominant(in.G, in.Z, lp0)) {
      EXPECT_EQ(code_of([&] { twisted_d(in.G, in.Z, in.lp, lp0, TwistOracle::GenericBundle); }),
                ErrorCode::OracleDomainViolation);
      continue;
    }
    ++dominant;
    auto h1_L0 = [&](const Cycle& z1) {
      std::int64_t best = 0;
      oracle::for_box(std::vector<std::int64_t>(in.G.size(), 0), z1.coeffs(), [&](const std::vector<std::int64_t>& l) {
        best = std::min(best, oracle::chi(in.G, l) + oracle::lp_pair(lp0, l));
      });
      return -best;
    };
    const auto a = twisted_d(in.G, in.Z, in.lp, lp0, TwistOracle::GenericBundle);
    const auto b = twisted_d(in.G, in.Z, in.lp, h1_L0);
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(a.codim, b.codim);
  }
  EXPECT_GT(dominant, 10);
}
