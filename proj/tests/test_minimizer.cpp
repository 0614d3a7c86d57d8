#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "symcut/brute.hpp"
#include "symcut/hypergraph.hpp"
#include "symcut/instance_io.hpp"
#include "symcut/lax_back_order.hpp"
#include "symcut/optimal_set.hpp"
#include "symcut/round_checks.hpp"

namespace symcut {
namespace {

using namespace symcut::testing;

std::vector<V> keys(std::initializer_list<V> xs) { return xs; }

TEST(ScanBuilder, TriangleUnthresholded) {
  const GraphCutOracle<I> d(triangle());
  const auto b = lax_back_order_scan<I>(d, Partition(3), V::infinity(), 0);
  EXPECT_EQ(b.order.order, (std::vector<ClassIndex>{0, 1, 2}));
  EXPECT_EQ(b.order.keys, keys({V::infinity(), V(3), V(3)}));
  EXPECT_EQ(b.oracle_calls, 3u);
}

TEST(ScanBuilder, TriangleAppendsMidScan) {
  const GraphCutOracle<I> d(triangle());
  const auto b = lax_back_order_scan<I>(d, Partition(3), V(2), 0);
  EXPECT_EQ(b.order.order, (std::vector<ClassIndex>{0, 1, 2}));
  EXPECT_EQ(b.order.keys, keys({V::infinity(), V(2), V(2)}));
  // One scan: class 1 reaches tau and class 2 is then evaluated against {0, 1}.
  EXPECT_EQ(b.oracle_calls, 2u);
}

TEST(ScanBuilder, SingleClass) {
  const GraphCutOracle<I> d(triangle());
  Partition p(3);
  p.join(0, 1);
  p.join(0, 1);
  const auto b = lax_back_order_scan<I>(d, p, V::infinity(), 0);
  EXPECT_EQ(b.order.order.size(), 1u);
  EXPECT_EQ(b.order.keys, keys({V::infinity()}));
  EXPECT_EQ(b.oracle_calls, 0u);
}

TEST(ScanBuilder, AllZeroCandidatesStillOrdered) {
  const GraphCutOracle<I> d(WeightedGraph<I>(4));
  const auto b = lax_back_order_scan<I>(d, Partition(4), V::infinity(), 2);
  EXPECT_EQ(b.order.order, (std::vector<ClassIndex>{2, 0, 1, 3}));
}

TEST(ScanBuilder, RejectsBadFirst) {
  const GraphCutOracle<I> d(triangle());
  EXPECT_THROW(lax_back_order_scan<I>(d, Partition(3), V::infinity(), 3), std::invalid_argument);
}

TEST(QueueBuilder, Triangle) {
  const GraphCutOracle<I> d(triangle());
  for (auto kind : {QueueKind::heap, QueueKind::bucket}) {
    const auto b = lax_back_order_queue<I>(d, Partition(3), V::infinity(), 0, kind);
    EXPECT_EQ(b.order.order, (std::vector<ClassIndex>{0, 1, 2}));
    EXPECT_EQ(b.order.keys, keys({V::infinity(), V(3), V(3)}));
  }
}

TEST(QueueBuilder, UnitPath) {
  const GraphCutOracle<I> d(make_graph(3, {{0, 1, 1}, {1, 2, 1}}));
  const auto b = lax_back_order_queue<I>(d, Partition(3), V::infinity(), 0, QueueKind::heap);
  EXPECT_EQ(b.order.order, (std::vector<ClassIndex>{0, 1, 2}));
  EXPECT_EQ(b.order.keys, keys({V::infinity(), V(1), V(1)}));
}

TEST(QueueBuilder, SingleClass) {
  const GraphCutOracle<I> d(triangle());
  Partition p(3);
  p.join(0, 1);
  p.join(0, 1);
  const auto b = lax_back_order_queue<I>(d, p, V::infinity(), 0, QueueKind::heap);
  EXPECT_EQ(b.order.order.size(), 1u);
  EXPECT_EQ(b.oracle_calls, 0u);
}

TEST(QueueBuilder, OutputVerifiesOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const GraphCutOracle<I> d(gen_random_graph({7, 0.5, 6, seed, false}));
    const Partition p(7);
    for (V tau : {V(1), V(4), V::infinity()}) {
      for (auto kind : {QueueKind::heap, QueueKind::bucket}) {
        const auto b = lax_back_order_queue<I>(d, p, tau, seed % 7, kind);
        const auto r = verify_lax_back_order(d, p, b.order);
        EXPECT_TRUE(r) << "seed " << seed << " tau " << tau << ": " << r.witness;
      }
    }
  }
}

TEST(QueueBuilder, NeedsKeyedOracle) {
  Hypergraph<I> h(3);
  h.add_edge(1, {0, 1, 2});
  EXPECT_THROW(lax_back_order_queue<I>(HypergraphCutOracle<I>(h), Partition(3), V::infinity(), 0, QueueKind::heap),
               CapabilityError);
}

LaxBackOrder<I> identity_order(std::initializer_list<V> ks) {
  LaxBackOrder<I> o;
  o.keys = ks;
  for (ClassIndex i = 0; i < o.keys.size(); ++i) o.order.push_back(i);
  return o;
}

TEST(ContractRound, JoinsAdjacentPairsAtThreshold) {
  Partition p(4);
  EXPECT_EQ(contract_round(p, identity_order({V::infinity(), V(3), V(2), V(3)}), V(3)), 2u);
  EXPECT_EQ(p.class_count(), 2u);
  EXPECT_EQ(p.class_of(0), p.class_of(1));
  EXPECT_EQ(p.class_of(2), p.class_of(3));
}

TEST(ContractRound, ChainsEverything) {
  Partition p(4);
  EXPECT_EQ(contract_round(p, identity_order({V::infinity(), V(5), V(5), V(5)}), V(3)), 3u);
  EXPECT_EQ(p.class_count(), 1u);
}

TEST(ContractRound, LoweredThreshold) {
  Partition p(3);
  EXPECT_EQ(contract_round(p, identity_order({V::infinity(), V(1), V(1)}), V(1)), 2u);
  EXPECT_EQ(p.class_count(), 1u);
}

TEST(OptimalSet, Triangle) {
  const GraphCutOracle<I> d(triangle());
  const auto r = optimal_set(d);
  EXPECT_EQ(r.value, V(3));
  EXPECT_EQ(r.set.to_mask(), 0b100u);
  EXPECT_EQ(r.stats.joins_total(), 2u);
}

TEST(OptimalSet, MaxbackBaselineOnTriangle) {
  MinimizeConfig c;
  c.algorithm = Algorithm::maxback;
  const auto r = optimal_set(GraphCutOracle<I>(triangle()), c);
  EXPECT_EQ(r.value, V(3));
  EXPECT_EQ(r.stats.rounds, 2u);
  EXPECT_EQ(r.stats.joins_per_round, (std::vector<std::size_t>{1, 1}));
}

TEST(OptimalSet, TwoElements) {
  const auto r = optimal_set(GraphCutOracle<I>(make_graph(2, {{0, 1, 5}})));
  EXPECT_EQ(r.value, V(5));
  EXPECT_EQ(r.set.size(), 1u);
}

TEST(OptimalSet, DisconnectedGraph) {
  const auto r = optimal_set(GraphCutOracle<I>(make_graph(5, {{0, 1, 2}, {1, 2, 3}, {3, 4, 1}})));
  EXPECT_EQ(r.value, V(0));
  const auto m = r.set.to_mask();
  EXPECT_TRUE(m == 0b00111u || m == 0b11000u) << r.set.str();
}

TEST(OptimalSet, RejectsTinyGroundSet) {
  EXPECT_THROW(optimal_set(GraphCutOracle<I>(WeightedGraph<I>(1))), std::invalid_argument);
}

TEST(OptimalSet, CapabilityErrors) {
  Hypergraph<I> h(3);
  h.add_edge(1, {0, 1, 2});
  MinimizeConfig queue;
  queue.order_builder = OrderBuilder::queue;
  EXPECT_THROW(optimal_set(HypergraphCutOracle<I>(h), queue), CapabilityError);

  WeightedGraph<double> g(2);
  g.add_edge(0, 1, 0.5);
  MinimizeConfig bucket = queue;
  bucket.queue_kind = QueueKind::bucket;
  EXPECT_THROW(optimal_set(GraphCutOracle<double>(g), bucket), CapabilityError);
  EXPECT_EQ(optimal_set(GraphCutOracle<double>(g), queue).value, Value<double>(0.5));
}

TEST(OptimalSet, FirstElementOutOfRange) {
  MinimizeConfig c;
  c.first_element = 3;
  EXPECT_THROW(optimal_set(GraphCutOracle<I>(triangle()), c), std::invalid_argument);
}

TEST(OptimalSet, MinSingletonInitCountsCalls) {
  MinimizeConfig c;
  c.init_threshold = InitThreshold::min_singleton;
  const auto r = optimal_set(GraphCutOracle<I>(triangle()), c);
  EXPECT_EQ(r.value, V(3));
  EXPECT_EQ(r.stats.init_calls, 3u);
}

TEST(OptimalSet, ObserverSeesEveryRound) {
  const GraphCutOracle<I> d(gen_random_graph({8, 0.5, 5, 3, true}));
  std::size_t seen = 0;
  const auto r = optimal_set<I>(d, {}, [&](const RoundRecord<I>& rec) {
    EXPECT_EQ(rec.round, seen++);
    EXPECT_EQ(rec.before.class_count(), rec.after.class_count() + rec.joins);
  });
  EXPECT_EQ(seen, r.stats.rounds);
}

TEST(OptimalSet, FirstRoundIsMaxBackOrder) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GraphCutOracle<I> d(gen_random_graph({7, 0.5, 8, seed, true}));
    bool checked = false;
    optimal_set<I>(d, {}, [&](const RoundRecord<I>& rec) {
      if (rec.round != 0) return;
      EXPECT_TRUE(rec.order.threshold.is_positive_infinity());
      EXPECT_TRUE(verify_lax_back_order(d, rec.before, rec.order));
      checked = true;
    });
    EXPECT_TRUE(checked);
  }
}

MinimizeConfig config(OrderBuilder b, QueueKind q, InitThreshold init, bool debug) {
  MinimizeConfig c;
  c.order_builder = b;
  c.queue_kind = q;
  c.init_threshold = init;
  c.debug_checks = debug;
  return c;
}

TEST(OptimalSet, AgreesWithBruteForceUnderEveryConfiguration) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const GraphCutOracle<I> d(gen_random_graph({n, 0.5, 10, seed, true}));
    const auto truth = brute_min_bipartition(d);
    for (auto b : {OrderBuilder::scan, OrderBuilder::queue}) {
      for (auto q : {QueueKind::heap, QueueKind::bucket}) {
        for (auto init : {InitThreshold::infinity, InitThreshold::min_singleton}) {
          const auto r = optimal_set(d, config(b, q, init, true));
          EXPECT_EQ(r.value, truth.best_value) << "seed " << seed;
          EXPECT_EQ(d.eval(r.set, r.set.complement()), r.value);
        }
      }
    }
  }
}

TEST(OptimalSet, DoubleWeights) {
  WeightedGraph<double> g(4);
  g.add_edge(0, 1, 0.1);
  g.add_edge(1, 2, 0.2);
  g.add_edge(2, 3, 0.7);
  g.add_edge(3, 0, 0.2);
  const GraphCutOracle<double> d(g);
  const auto r = optimal_set(d);
  EXPECT_TRUE(values_match(r.value, brute_min_bipartition(d).best_value));
}

TEST(OptimalSet, Hypergraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const HypergraphCutOracle<I> d(gen_random_hypergraph({6, 8, 4, 5, seed}));
    EXPECT_EQ(optimal_set(d).value, brute_min_bipartition(d).best_value) << "seed " << seed;
  }
}

TEST(RoundChecker, NoViolationsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const GraphCutOracle<I> d(gen_random_graph({6, 0.6, 4, seed, false}));
    RoundChecker<I> checker(d);
    optimal_set<I>(d, {}, std::ref(checker));
    EXPECT_TRUE(checker.tally().ok()) << checker.tally().messages.front();
    EXPECT_GT(checker.tally().checked[0], 0u);
  }
}

TEST(RoundChecker, FlagsABrokenOrder) {
  // Path a-b-c with w(a,b)=1, w(b,c)=2, presented in the order (a, c, b).
  const GraphCutOracle<I> d(make_graph(3, {{0, 1, 1}, {1, 2, 2}}));
  const Partition before(3);
  Partition after(3);
  LaxBackOrder<I> order{{0, 2, 1}, {V::infinity(), V(0), V(3)}, V::infinity()};
  const ElementSet best = set_of(3, {1});
  after.join(1, 2);
  RoundChecker<I> checker(d);
  checker.enable_only({RoundProperty::order_validity});
  checker.check({0, before, order, V::infinity(), V(3), best, after, 1});
  EXPECT_FALSE(checker.tally().ok());
}

}  // namespace
}  // namespace symcut
