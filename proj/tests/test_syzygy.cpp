#include <gtest/gtest.h>

#include "lissajous/classify.hpp"
#include "lissajous/error.hpp"
#include "lissajous/syzygy.hpp"

using namespace lissajous;

namespace {

const char* kMinus8Plus13 = "123131231232312312123123131231232312312123";

}  // namespace

TEST(Omega, Examples) {
  EXPECT_EQ(omega({1, 4, 1}).str(), "+++-+++");
  EXPECT_EQ(omega({1, 1, 0}).str(), "+");
  EXPECT_EQ(omega({2, 1, 0}).str(), "+-+");
  EXPECT_THROW(omega({1, 1, 1}), Error);
}

TEST(SyzygySequence, WorkedExample) {
  SyzygySeq s = syzygy_sequence({-8, 13}, 1);
  EXPECT_EQ(s.str(), kMinus8Plus13);
  EXPECT_EQ(s.grouped(7), "1231312.3123231.2312123.1231312.3123231.2312123");
}

TEST(SyzygySequence, SmallTypes) {
  EXPECT_EQ(syzygy_sequence({1, -2}, 1).str(), "123123");
  SyzygySeq s = syzygy_sequence({4, -5}, 1);
  EXPECT_EQ(s.size(), 18u);
  EXPECT_EQ(s.str(), "121232313121232313");
  EXPECT_TRUE(is_reduced(s));
  EXPECT_EQ(syzygy_sequence({1, -2}, 2).str(), "123123123123");
}

TEST(SyzygySequence, RejectsNonPrimitive) {
  try {
    syzygy_sequence({1, 4}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimitive);
  }
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(SyzygySeq("123123")));
  EXPECT_FALSE(is_reduced(SyzygySeq("1123")));
  EXPECT_FALSE(is_reduced(SyzygySeq("1231")));  // cyclic wrap
  EXPECT_TRUE(is_reduced(SyzygySeq(kMinus8Plus13)));
}

TEST(SyzygySeq, Helpers) {
  EXPECT_EQ(SyzygySeq("1213").mirrored().str(), "1312");
  EXPECT_EQ(SyzygySeq("1213").rotated(1).str(), "2131");
  EXPECT_THROW(SyzygySeq("124"), Error);
}

TEST(SyzygyProperty, ReducedClosedAndSized) {
  for (const LissajousType& t : enumerate_p0(100)) {
    LevelSlope ls = level_slope_of(t);
    SyzygySeq s = syzygy_sequence(t, 1);
    ASSERT_TRUE(is_reduced(s)) << to_string(t);
    ASSERT_EQ(static_cast<std::int64_t>(s.size()), 6 * (ls.p * (2 * ls.level - 1) + ls.q * (2 * ls.level + 1)));
    ASSERT_EQ(s[0], 1);
  }
}
