#include <gtest/gtest.h>

#include <limits>
#include <sstream>

#include "symcut/element_set.hpp"
#include "symcut/partition.hpp"
#include "symcut/value.hpp"

namespace symcut {
namespace {

using VI = Value<std::int64_t>;
using VD = Value<double>;

TEST(Value, OrderingWithInfinities) {
  EXPECT_LT(VI::negative_infinity(), VI(-1000));
  EXPECT_LT(VI(5), VI::infinity());
  EXPECT_EQ(VI::infinity(), VI::infinity());
  EXPECT_EQ(min(VI(7), VI(5)), VI(5));
  EXPECT_EQ(min(VI::infinity(), VI(3)), VI(3));
  EXPECT_EQ(max(VI::negative_infinity(), VI(0)), VI(0));
}

TEST(Value, Arithmetic) {
  EXPECT_EQ(VI(2) + VI(3), VI(5));
  EXPECT_EQ(VI(2) + VI::infinity(), VI::infinity());
  EXPECT_EQ((VD(0.5) + VD(0.25)).finite(), 0.75);
}

TEST(Value, DoubleInfinityMapsToInfinity) {
  EXPECT_EQ(VD(std::numeric_limits<double>::infinity()), VD::infinity());
  EXPECT_EQ(VD(-std::numeric_limits<double>::infinity()), VD::negative_infinity());
  EXPECT_THROW(VD(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
}

TEST(Value, Printing) {
  std::ostringstream os;
  os << VI(3) << ' ' << VI::infinity() << ' ' << VI::negative_infinity();
  EXPECT_EQ(os.str(), "3 inf -inf");
}

TEST(Value, FloatTolerance) {
  EXPECT_TRUE(values_match(VD(0.1 + 0.2), VD(0.3)));
  EXPECT_FALSE(values_match(VD(0.3), VD(0.31)));
  EXPECT_TRUE(value_at_least(VD(0.3 - 1e-12), VD(0.3)));
  EXPECT_TRUE(values_match(VI::infinity(), VI::infinity()));
}

TEST(ElementSet, InsertAndQuery) {
  ElementSet s(5);
  s.insert(3);
  s.insert(1);
  s.insert(3);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(s.str(), "{1,3}");
  EXPECT_EQ(s.str(1), "{2,4}");
  EXPECT_THROW(s.insert(5), std::out_of_range);
}

TEST(ElementSet, MaskRoundTrip) {
  const auto s = ElementSet::from_mask(6, 0b101001);
  EXPECT_EQ(s.to_mask(), 0b101001u);
  EXPECT_EQ(s.complement().to_mask(), 0b010110u);
  EXPECT_TRUE(s.intersects(ElementSet::from_mask(6, 0b000001)));
  EXPECT_FALSE(s.intersects(s.complement()));
}

TEST(Partition, StartsDiscrete) {
  Partition p(4);
  EXPECT_EQ(p.class_count(), 4u);
  for (Element e = 0; e < 4; ++e) EXPECT_EQ(p.class_of(e), e);
  p.validate();
}

TEST(Partition, JoinShiftsIndices) {
  Partition p(5);
  const ClassIndex c = p.join(3, 1);
  EXPECT_EQ(c, 2u);
  EXPECT_EQ(p.class_count(), 4u);
  EXPECT_EQ(p.class_of(1), 2u);
  EXPECT_EQ(p.class_of(3), 2u);
  EXPECT_EQ(p.class_of(4), 3u);
  EXPECT_EQ(p.class_set(2).to_mask(), 0b01010u);
  p.validate();
}

TEST(Partition, ExpandUnionsClasses) {
  Partition p(4);
  p.join(0, 2);
  const ClassIndex cls[] = {0, 2};
  EXPECT_EQ(p.expand(cls).to_mask(), 0b1101u);
}

TEST(Partition, JoinRejectsBadArguments) {
  Partition p(3);
  EXPECT_THROW(p.join(1, 1), std::invalid_argument);
  EXPECT_THROW(p.join(0, 3), std::out_of_range);
}

}  // namespace
}  // namespace symcut
