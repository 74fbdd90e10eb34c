#include <gtest/gtest.h>

#include <random>

#include "abeldim/chi_opt.hpp"
#include "abeldim/error.hpp"
#include "abeldim/examples.hpp"
#include "abeldim/lattice.hpp"
#include "oracles.hpp"

using namespace abeldim;

namespace {

GraphSpec chain(const std::vector<std::int64_t>& e) {
  GraphSpec s;
  for (std::size_t i = 0; i < e.size(); ++i) s.vertices.push_back({"v" + std::to_string(i), e[i]});
  for (std::size_t i = 1; i < e.size(); ++i) s.edges.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
  return s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Graph, RejectsBadInput) {
  EXPECT_EQ(code_of([] { build_graph(chain({0})); }), ErrorCode::NotNegativeDefinite);
  EXPECT_EQ(code_of([] { build_graph(chain({-1, -1})); }), ErrorCode::NotNegativeDefinite);
  EXPECT_NO_THROW(build_graph(chain({-2, -2, -2, -2, -2, -2, -2, -2, -2})));

  auto s = chain({-2, -2, -2});
  s.edges.emplace_back("v0", "v2");
  EXPECT_EQ(code_of([&] { build_graph(s); }), ErrorCode::NotATree);

  s = chain({-2, -2});
  s.edges.emplace_back("v1", "v0");
  EXPECT_EQ(code_of([&] { build_graph(s); }), ErrorCode::DuplicateEdge);

  s = chain({-2, -2});
  s.edges.emplace_back("v1", "nope");
  EXPECT_EQ(code_of([&] { build_graph(s); }), ErrorCode::UnknownVertex);

  s = chain({-2, -2, -2});
  s.edges.pop_back();
  EXPECT_EQ(code_of([&] { build_graph(s); }), ErrorCode::NotATree);

  s = chain({-2});
  s.edges.emplace_back("v0", "v0");
  EXPECT_EQ(code_of([&] { build_graph(s); }), ErrorCode::NotATree);
}

TEST(Graph, SingleMinusTwoVertex) {
  const auto G = build_graph(chain({-2}));
  EXPECT_EQ(determinant_abs(G), 2);
  EXPECT_EQ(canonical_cycle(G)[0], 0);
  EXPECT_EQ(laufer_fundamental_cycle(G), Cycle(std::vector<std::int64_t>{1}));
}

TEST(Graph, A3ChainDeterminantAndDualBasis) {
  const auto G = build_graph(chain({-2, -2, -2}));
  EXPECT_EQ(determinant_abs(G), 4);
  // E*_0 = (3/4, 1/2, 1/4)
  const auto& d = G.dual_basis()[0];
  EXPECT_EQ(d[0], Rational(3, 4));
  EXPECT_EQ(d[1], Rational(1, 2));
  EXPECT_EQ(d[2], Rational(1, 4));
}

TEST(Lattice, DualBasisPairsToMinusDelta) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto G = oracle::random_tree(rng, 6);
    for (std::size_t v = 0; v < G.size(); ++v)
      for (std::size_t w = 0; w < G.size(); ++w)
        EXPECT_EQ(pairing_with_basis(G, dual_cycle(G, v), w), Rational(v == w ? -1 : 0));
  }
}

TEST(Lattice, CanonicalCycleSatisfiesAdjunction) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const auto G = oracle::random_tree(rng, 6);
    const auto zk = canonical_cycle(G);
    for (std::size_t v = 0; v < G.size(); ++v)
      EXPECT_EQ(pairing_with_basis(G, zk, v), Rational(G.self_intersection(v) + 2));
  }
}

TEST(Lattice, ChiMatchesExpansion) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const auto G = oracle::random_tree(rng, 5);
    std::vector<std::int64_t> l(G.size());
    for (auto& x : l) x = std::uniform_int_distribution<std::int64_t>(-3, 4)(rng);
    const Cycle c(l);
    EXPECT_EQ(chi(G, c), oracle::chi(G, l));
    // chi(l) = -(l, l - Z_K)/2
    const QCycle q(c);
    EXPECT_EQ(chi(G, q), -pairing(G, q, q - canonical_cycle(G)) / 2);
  }
}

TEST(Lattice, LauferMatchesExhaustiveSearch) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 60; ++t) {
    const auto G = oracle::random_tree(rng, 4);
    const auto zmin = laufer_fundamental_cycle(G);
    std::int64_t hi = 0;
    for (auto x : zmin.coeffs()) hi = std::max(hi, x);
    EXPECT_EQ(zmin.coeffs(), oracle::minimal_antinef(G, hi + 1));
    EXPECT_TRUE(in_lipman_cone(G, zmin));
  }
}

TEST(Lattice, EStarRoundTrip) {
  const auto G = build_graph(chain({-2, -3, -2}));
  EStarCombination lp{{1, 0, 2}};
  const auto x = minus_lprime(G, lp);
  EXPECT_EQ(estar_from_qcycle(G, x).a, lp.a);
  EXPECT_EQ(lprime_pairing(lp, Cycle(std::vector<std::int64_t>{2, 5, 1})), 4);
  EXPECT_EQ(estar_support(lp), (VertexSet{0, 2}));
  EXPECT_EQ(code_of([&] { validate(G, EStarCombination{{0, -1, 0}}); }), ErrorCode::NotInLipmanCone);
  EXPECT_EQ(code_of([&] { validate(G, EStarCombination{{0, 1}}); }), ErrorCode::VertexMismatch);
  EXPECT_EQ(code_of([&] { estar_from_qcycle(G, QCycle(Cycle(std::vector<std::int64_t>{1, 0, 0}))); }),
            ErrorCode::NotInLipmanCone);
}

TEST(Lattice, ComponentsAndSupport) {
  const auto G = build_graph(chain({-2, -2, -2, -2, -2}));
  const Cycle x(std::vector<std::int64_t>{1, 1, 0, 2, 0});
  EXPECT_EQ(support(x), (VertexSet{0, 1, 3}));
  const auto comps = components(G, support(x));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1}));
  EXPECT_EQ(comps[1], (VertexSet{3}));
  EXPECT_FALSE(is_connected(G, support(x)));
  EXPECT_EQ(complement(5, support(x)), (VertexSet{2, 4}));
  EXPECT_EQ(restrict(x, VertexSet{3}), Cycle(std::vector<std::int64_t>{0, 0, 0, 2, 0}));
}

TEST(Blowup, PullbackPreservesPairingAndChi) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 30; ++t) {
    const auto G = oracle::random_tree(rng, 5);
    const auto v = std::uniform_int_distribution<std::size_t>(0, G.size() - 1)(rng);
    const auto [H, map] = blow_up_generic(G, v);
    ASSERT_EQ(H.size(), G.size() + 1);
    EXPECT_EQ(H.self_intersection(map.new_vertex), -1);
    EXPECT_EQ(H.self_intersection(v), G.self_intersection(v) - 1);
    std::vector<std::int64_t> a(G.size()), b(G.size());
    for (auto& x : a) x = std::uniform_int_distribution<std::int64_t>(-2, 3)(rng);
    for (auto& x : b) x = std::uniform_int_distribution<std::int64_t>(-2, 3)(rng);
    const Cycle x(a), y(b);
    EXPECT_EQ(pairing(H, map.pull(x), map.pull(y)), pairing(G, x, y));
    EXPECT_EQ(chi(H, map.pull(x)), chi(G, x));
    // pi^* E_w^* = E_w^* on the blow-up
    for (std::size_t w = 0; w < G.size(); ++w) EXPECT_EQ(map.pull(dual_cycle(G, w)), dual_cycle(H, w));
  }
}

TEST(Blowup, DefaultIdsAreFresh) {
  const auto G = build_graph(chain({-2}));
  const auto [H, m1] = blow_up_generic(G, 0);
  EXPECT_EQ(m1.new_id, "v0'");
  const auto [K, m2] = blow_up_generic(H, 0);
  EXPECT_EQ(m2.new_id, "v0''");
}

TEST(Builtins, TwinGammaShape) {
  const auto ex = twin_gamma(30);
  EXPECT_EQ(ex.graph.size(), 15u);
  EXPECT_EQ(ex.graph.self_intersection(ex.center), -30);
  EXPECT_EQ(ex.branches.size(), 2u);
  EXPECT_EQ(ex.lprime.a[ex.center], 28);
  EXPECT_THROW(twin_gamma(2), Error);
}
