#include <gtest/gtest.h>

#include <bit>

#include "fixtures.hpp"
#include "symcut/brute.hpp"
#include "symcut/instance_io.hpp"
#include "symcut/lax_back_order.hpp"
#include "symcut/set_function.hpp"

namespace symcut {
namespace {

using namespace symcut::testing;

TEST(BruteMinBipartition, Triangle) {
  const auto r = brute_min_bipartition(GraphCutOracle<I>(triangle()));
  EXPECT_EQ(r.best_set, 0b100u);
  EXPECT_EQ(r.best_value, V(3));
}

TEST(BruteMinBipartition, TwoElements) {
  const auto r = brute_min_bipartition(GraphCutOracle<I>(make_graph(2, {{0, 1, 5}})));
  EXPECT_EQ(r.best_value, V(5));
  EXPECT_EQ(r.best_set, 0b10u);
}

TEST(BruteMinBipartition, CompleteGraphK4) {
  const auto g = gen_random_graph({4, 1.0, 1, 9, false});
  ASSERT_EQ(g.edge_count(), 6u);
  const auto r = brute_min_bipartition(GraphCutOracle<I>(g));
  EXPECT_EQ(r.best_value, V(3));
  EXPECT_EQ(std::popcount(r.best_set), 1);
}

TEST(BruteMinBipartition, TwoComponents) {
  const auto r = brute_min_bipartition(GraphCutOracle<I>(make_graph(4, {{0, 1, 2}, {2, 3, 7}})));
  EXPECT_EQ(r.best_value, V(0));
  EXPECT_EQ(r.best_set, 0b1100u);
}

TEST(BruteMinBipartition, SizeLimits) {
  EXPECT_THROW(brute_min_bipartition(GraphCutOracle<I>(WeightedGraph<I>(1))), std::invalid_argument);
  EXPECT_THROW(brute_min_bipartition(GraphCutOracle<I>(WeightedGraph<I>(25))), std::invalid_argument);
}

TEST(BruteLambda, Examples) {
  const GraphCutOracle<I> d(triangle());
  EXPECT_EQ(brute_lambda(d, 0, 1), V(4));
  EXPECT_EQ(brute_lambda(GraphCutOracle<I>(make_graph(2, {{0, 1, 6}})), 0, 1), V(6));
  EXPECT_EQ(brute_lambda(GraphCutOracle<I>(WeightedGraph<I>(2)), 0, 1), V(0));
}

TEST(BruteLambda, MatrixIsSymmetric) {
  const GraphCutOracle<I> d(gen_random_graph({6, 0.5, 9, 4, true}));
  const auto m = brute_lambda_matrix(d);
  for (Element s = 0; s < 6; ++s) {
    for (Element t = 0; t < 6; ++t) {
      if (s != t) {
        EXPECT_EQ(m[s][t], m[t][s]);
      }
    }
  }
}

TEST(CheckMonotone, GraphCut) {
  const GraphCutOracle<I> d(gen_random_graph({5, 0.7, 8, 2, false}));
  EXPECT_TRUE(check_monotone(d));
  EXPECT_TRUE(check_consistent(d));
}

TEST(CheckMonotone, ConstantFunction) {
  const auto d = TableOracle<I>::from_function(4, [](Mask, Mask) { return I{3}; });
  EXPECT_TRUE(check_monotone(d));
}

TEST(CheckMonotone, ViolationHasWitness) {
  const auto d = TableOracle<I>::from_function(3, [](Mask s, Mask t) -> I {
    const auto pair = [&](Mask a, Mask b) { return (s == a && t == b) || (s == b && t == a); };
    if (pair(0b001, 0b010)) return 2;
    if (pair(0b001, 0b110)) return 1;
    return 0;
  });
  const auto r = check_monotone(d);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.witness.empty());
}

TEST(CheckConsistent, ViolationHasWitness) {
  // R={0}, S={1}, T={2}: d(S,R) >= d(T,R) but d(S,R+T)=0 < d(S+R,T)=1.
  const auto d = TableOracle<I>::from_function(3, [](Mask s, Mask t) -> I {
    const auto pair = [&](Mask a, Mask b) { return (s == a && t == b) || (s == b && t == a); };
    return pair(0b011, 0b100) ? 1 : 0;
  });
  const auto r = check_consistent(d);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.witness.empty());
}

SetFunctionTable<I> by_size(std::size_t n, I (*g)(I, I)) {
  return SetFunctionTable<I>::from_function(n, [&](Mask a) { return g(std::popcount(a), static_cast<I>(n)); });
}

TEST(CheckSymmetricSubmodular, Examples) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto a = check_symmetric_submodular(by_size(n, [](I k, I m) { return k * (m - k); }));
    EXPECT_TRUE(a.symmetric);
    EXPECT_TRUE(a.submodular);
    const auto b = check_symmetric_submodular(by_size(n, [](I k, I) { return k; }));
    EXPECT_FALSE(b.symmetric);
    EXPECT_TRUE(b.submodular);
    // -|A|^2 is a concave function of |A|, hence submodular; |A|^2 is not.
    const auto c = check_symmetric_submodular(by_size(n, [](I k, I) { return -k * k; }));
    EXPECT_FALSE(c.symmetric);
    EXPECT_TRUE(c.submodular);
    const auto d = check_symmetric_submodular(by_size(n, [](I k, I) { return k * k; }));
    EXPECT_FALSE(d.symmetric);
    EXPECT_FALSE(d.submodular);
  }
}

TEST(VerifyLaxBackOrder, AcceptsBuilderOutput) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GraphCutOracle<I> d(gen_random_graph({6, 0.5, 5, seed, false}));
    const Partition p(6);
    for (V tau : {V(0), V(3), V::infinity()}) {
      const auto built = lax_back_order_scan<I>(d, p, tau, 0);
      EXPECT_TRUE(verify_lax_back_order(d, p, built.order)) << verify_lax_back_order(d, p, built.order).witness;
    }
  }
}

TEST(VerifyLaxBackOrder, RejectsOutOfOrderPath) {
  // Path a-b-c, w(a,b)=1, w(b,c)=2: after a, b (1) must precede c (0).
  const GraphCutOracle<I> d(make_graph(3, {{0, 1, 1}, {1, 2, 2}}));
  const Partition p(3);
  LaxBackOrder<I> order{{0, 2, 1}, {V::infinity(), V(0), V(3)}, V::infinity()};
  const auto r = verify_lax_back_order(d, p, order);
  EXPECT_FALSE(r);
  EXPECT_NE(r.witness.find("beaten"), std::string::npos);
}

TEST(VerifyLaxBackOrder, SingleClass) {
  const GraphCutOracle<I> d(make_graph(3, {{0, 1, 1}, {1, 2, 2}}));
  Partition p(3);
  p.join(0, 1);
  p.join(0, 1);
  LaxBackOrder<I> order{{0}, {V::infinity()}, V::infinity()};
  EXPECT_TRUE(verify_lax_back_order(d, p, order));
}

}  // namespace
}  // namespace symcut
