#include <gtest/gtest.h>

#include "dmx/errors.hpp"
#include "dmx/set_system.hpp"
#include "helpers.hpp"

using namespace dmx;
using testing_helpers::S;

TEST(GroundSet, RejectsBadLabels) {
  EXPECT_THROW(GroundSet({"a", "a"}), InvalidArgument);
  EXPECT_THROW(GroundSet({"a", ""}), InvalidArgument);
  std::vector<std::string> many;
  for (int i = 0; i < 25; ++i) many.push_back("x" + std::to_string(i));
  EXPECT_THROW(GroundSet{many}, InvalidArgument);
  many.pop_back();
  EXPECT_EQ(GroundSet(many).size(), 24);
}

TEST(GroundSet, LabelLookup) {
  const GroundSet g({"a", "b", "c"});
  EXPECT_EQ(g.index_of("b"), 1);
  EXPECT_FALSE(g.index_of("z").has_value());
  const std::vector<std::string> labels = {"c", "a"};
  EXPECT_EQ(g.mask_of(labels), SubsetMask(0b101));
  const std::vector<std::string> bad = {"q"};
  EXPECT_THROW(g.mask_of(bad), InvalidArgument);
  EXPECT_EQ(g.without(1).labels(), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(GroundSet::numbered(3).labels(), (std::vector<std::string>{"1", "2", "3"}));
}

TEST(SetSystem, SortsAndDeduplicates) {
  const SetSystem s(GroundSet::numbered(3), {S({1, 2}), S({}), S({3}), S({1, 2}), S({1})});
  ASSERT_EQ(s.family_size(), 4U);
  EXPECT_EQ(s.family()[0], S({}));
  EXPECT_EQ(s.family()[1], S({1}));
  EXPECT_EQ(s.family()[2], S({3}));
  EXPECT_EQ(s.family()[3], S({1, 2}));
  EXPECT_TRUE(s.contains(S({3})));
  EXPECT_FALSE(s.contains(S({2})));
  EXPECT_TRUE(s.proper());
  EXPECT_FALSE(SetSystem(GroundSet::numbered(2), {}).proper());
}

TEST(SetSystem, RejectsSetsOutsideTheGround) {
  EXPECT_THROW(SetSystem(GroundSet::numbered(2), {S({3})}), InvalidArgument);
}

TEST(SetSystem, MembershipAgreesAboveTheBitmapLimit) {
  // 18 elements: membership falls back to the sorted list.
  std::vector<SubsetMask> family = {SubsetMask(0), SubsetMask(1U << 17), SubsetMask(0b101)};
  const SetSystem s(GroundSet::numbered(18), family);
  EXPECT_TRUE(s.contains(SubsetMask(1U << 17)));
  EXPECT_TRUE(s.contains(SubsetMask(0b101)));
  EXPECT_FALSE(s.contains(SubsetMask(0b11)));
}

TEST(SetSystem, Formatting) {
  const SetSystem s(GroundSet({"a", "b", "c"}), {S({1, 3}), S({})});
  EXPECT_EQ(format_subset(s.ground(), S({1, 3})), "{a,c}");
  EXPECT_EQ(format_subset(s.ground(), S({})), "{}");
  EXPECT_EQ(format_family(s), "{}, {a,c}");
}

TEST(SetSystem, EqualityNeedsSameLabels) {
  const SetSystem a(GroundSet({"a", "b"}), {S({1})});
  const SetSystem b(GroundSet({"x", "y"}), {S({1})});
  EXPECT_FALSE(a == b);
  EXPECT_TRUE(a.with_ground(b.ground()) == b);
}
