#include <gtest/gtest.h>

#include "plocal/errors.hpp"
#include "plocal/permutation.hpp"

using plocal::Permutation;

TEST(Permutation, ProductAppliesLeftFactorFirst) {
  const auto a = Permutation::from_cycles("(1 2)", 3);
  const auto b = Permutation::from_cycles("(2 3)", 3);
  EXPECT_EQ((a * b).to_cycles(), "(1 3 2)");
  EXPECT_EQ(Permutation::from_cycles("(1 2)(2 3)", 3), a * b);
}

TEST(Permutation, CycleRoundTrip) {
  for (const char* text : {"(1 2 3)", "(1 4)(2 3)", "(1 2 3 4 5 6)", "()"}) {
    const auto p = Permutation::from_cycles(text, 6);
    EXPECT_EQ(Permutation::from_cycles(p.to_cycles(), 6), p) << text;
  }
  EXPECT_TRUE(Permutation::from_cycles("()", 4).is_identity());
}

TEST(Permutation, InverseAndImages) {
  const auto p = Permutation::from_cycles("(1 2 3 4)", 4);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(3), 0);
}

TEST(Permutation, ShiftAndExtend) {
  const auto p = Permutation::from_cycles("(1 2)", 2);
  EXPECT_EQ(p.extended(4).to_cycles(), "(1 2)");
  EXPECT_EQ(p.shifted(2, 4).to_cycles(), "(3 4)");
}

TEST(Permutation, RejectsMalformedInput) {
  EXPECT_THROW(Permutation::from_cycles("(1 2", 3), plocal::ParseError);
  EXPECT_THROW(Permutation::from_cycles("(1 x)", 3), plocal::ParseError);
  EXPECT_THROW(Permutation::from_cycles("(1 1)", 3), plocal::Error);
  EXPECT_THROW(Permutation::from_cycles("(1 5)", 3), plocal::OutOfRangePoint);
  EXPECT_THROW(Permutation::from_cycles("(0 1)", 3), plocal::OutOfRangePoint);
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), plocal::InvalidPermutation);
}
