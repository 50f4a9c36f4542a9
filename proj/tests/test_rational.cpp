#include <gtest/gtest.h>

#include "semicore/rational.hpp"

using semicore::BoundValue;

TEST(BoundValue, ReducesToLowestTerms) {
  BoundValue v(420, 400);
  EXPECT_EQ(v.numerator(), 21);
  EXPECT_EQ(v.denominator(), 20);
  EXPECT_EQ(v.str(), "21/20");
}

TEST(BoundValue, NormalizesSignIntoNumerator) {
  BoundValue v(3, -6);
  EXPECT_EQ(v.numerator(), -1);
  EXPECT_EQ(v.denominator(), 2);
  EXPECT_EQ(BoundValue(0, 7).str(), "0");
}

TEST(BoundValue, ArithmeticAndOrdering) {
  const BoundValue a(7, 4), b(3, 5);
  EXPECT_EQ(a * b, BoundValue(21, 20));
  EXPECT_EQ(a + b, BoundValue(47, 20));
  EXPECT_EQ(a - b, BoundValue(23, 20));
  EXPECT_EQ(a / b, BoundValue(35, 12));
  EXPECT_LT(b, a);
  EXPECT_GE(BoundValue(1), BoundValue(1, 1));
}

TEST(BoundValue, RejectsZeroDenominator) {
  EXPECT_THROW(BoundValue(1, 0), semicore::Error);
  EXPECT_THROW(BoundValue(1) / BoundValue(0), semicore::Error);
}
