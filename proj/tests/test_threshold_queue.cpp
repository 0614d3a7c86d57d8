#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "symcut/threshold_queue.hpp"

namespace symcut {
namespace {

using VI = Value<std::int64_t>;

template <class Q>
class QueueContract : public ::testing::Test {
 protected:
  std::unique_ptr<ThresholdedPQ<std::int64_t>> make(VI tau) {
    if constexpr (std::is_same_v<Q, BucketQueue>) {
      return std::make_unique<BucketQueue>(tau, 20);
    } else {
      return std::make_unique<HeapQueue<std::int64_t>>(tau);
    }
  }
};

using QueueTypes = ::testing::Types<HeapQueue<std::int64_t>, BucketQueue>;
TYPED_TEST_SUITE(QueueContract, QueueTypes);

TYPED_TEST(QueueContract, InsertCountsAndRejectsDuplicates) {
  auto q = this->make(VI(7));
  q->insert(0, VI(1));
  q->insert(1, VI(2));
  EXPECT_EQ(q->size(), 2u);
  EXPECT_TRUE(q->contains(0));
  EXPECT_FALSE(q->contains(2));
  EXPECT_THROW(q->insert(0, VI(3)), std::invalid_argument);
}

TYPED_TEST(QueueContract, DelMaxReturnsEntryAtThreshold) {
  auto q = this->make(VI(7));
  q->insert(0, VI(5));
  q->insert(1, VI(9));
  const auto [v, k] = q->del_max();
  EXPECT_EQ(v, 1u);
  EXPECT_EQ(k, VI(9));
}

TYPED_TEST(QueueContract, TieAboveThresholdTakesLowestIndex) {
  auto q = this->make(VI(7));
  q->insert(1, VI(9));
  q->insert(0, VI(8));
  EXPECT_EQ(q->del_max().first, 0u);
  EXPECT_EQ(q->del_max().first, 1u);
  EXPECT_TRUE(q->empty());
}

TYPED_TEST(QueueContract, SingleEntryBelowThreshold) {
  auto q = this->make(VI(7));
  q->insert(0, VI(5));
  const auto [v, k] = q->del_max();
  EXPECT_EQ(v, 0u);
  EXPECT_EQ(k, VI(5));
}

TYPED_TEST(QueueContract, UpdateKey) {
  auto q = this->make(VI(7));
  q->insert(0, VI(1));
  q->update_key(0, VI(4));
  EXPECT_EQ(q->key(0), VI(4));
  EXPECT_THROW(q->update_key(3, VI(4)), std::invalid_argument);
  EXPECT_THROW(q->update_key(0, VI(2)), std::invalid_argument);
}

TYPED_TEST(QueueContract, EmptyDelMaxThrows) {
  auto q = this->make(VI(7));
  EXPECT_THROW(q->del_max(), std::logic_error);
}

TEST(HeapQueue, AcceptsNegativeInfinityKeys) {
  HeapQueue<std::int64_t> q;
  q.insert(0, VI::negative_infinity());
  EXPECT_EQ(q.size(), 1u);
  q.insert(1, VI(-3));
  EXPECT_EQ(q.del_max().first, 1u);
}

TEST(HeapQueue, DoubleKeys) {
  HeapQueue<double> q(Value<double>(1.5));
  q.insert(0, Value<double>(0.25));
  q.insert(1, Value<double>(1.0));
  EXPECT_EQ(q.del_max().first, 1u);
}

TEST(BucketQueue, KeyRaisedAboveThresholdGoesToOverflowLevel) {
  BucketQueue q(VI(5), 20);
  q.insert(0, VI(3));
  q.insert(1, VI(4));
  q.update_key(0, VI(9));
  EXPECT_EQ(q.key(0), VI(9));
  EXPECT_EQ(q.del_max().first, 0u);
  EXPECT_EQ(q.del_max().first, 1u);
}

TEST(BucketQueue, CapIsThresholdOrBoundPlusOne) {
  EXPECT_EQ(BucketQueue(VI(5), 20).cap(), 5u);
  EXPECT_EQ(BucketQueue(VI(50), 20).cap(), 21u);
  EXPECT_EQ(BucketQueue(VI::infinity(), 20).cap(), 21u);
}

TEST(BucketQueue, RejectsKeysOutsideRange) {
  BucketQueue q(VI::infinity(), 10);
  EXPECT_THROW(q.insert(0, VI(-1)), std::invalid_argument);
  EXPECT_THROW(q.insert(0, VI(11)), std::invalid_argument);
  BucketQueue capped(VI(4), 10);
  capped.insert(0, VI(11));  // at or above tau: overflow level
  EXPECT_EQ(capped.key(0), VI(11));
}

TEST(BucketQueue, ScanWorkIsBoundedByLevelsAndRaises) {
  std::mt19937_64 rng(11);
  BucketQueue q(VI(30), 40);
  std::vector<std::int64_t> keys(60);
  for (ClassIndex v = 0; v < keys.size(); ++v) {
    keys[v] = static_cast<std::int64_t>(rng() % 20);
    q.insert(v, VI(keys[v]));
  }
  while (!q.empty()) {
    q.del_max();
    for (ClassIndex v = 0; v < keys.size(); ++v) {
      if (q.contains(v) && rng() % 4 == 0) {
        keys[v] += static_cast<std::int64_t>(rng() % 3);
        if (keys[v] > 40) keys[v] = 40;
        q.update_key(v, VI(keys[v]));
      }
    }
  }
  EXPECT_LE(q.levels_scanned(), q.cap() + 1 + q.level_raises() + q.del_max_count());
}

TEST(MakeQueue, CapabilityChecks) {
  EXPECT_THROW(make_queue<double>(QueueKind::bucket, Value<double>(1.0), 3.0), CapabilityError);
  EXPECT_THROW(make_queue<std::int64_t>(QueueKind::bucket, VI(1), std::nullopt), CapabilityError);
  EXPECT_NE(make_queue<std::int64_t>(QueueKind::bucket, VI(1), 4), nullptr);
  EXPECT_NE(make_queue<double>(QueueKind::heap, Value<double>(1.0), std::nullopt), nullptr);
}

}  // namespace
}  // namespace symcut
