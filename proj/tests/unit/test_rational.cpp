#include <gtest/gtest.h>

#include "test_support.hpp"
#include "toricvol/error.hpp"
#include "toricvol/rational.hpp"

using namespace toricvol;
using namespace toricvol::testing;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3/9"), Rational(-1, 3));
}

TEST(Rational, RejectsFloatsAndZeroDenominators) {
  for (const char* bad : {"0.5", "1e3", "1/0", "", "abc", "1/2/3"}) {
    try {
      parse_rational(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, StringRoundTrip) {
  for (const char* s : {"0", "5", "-5", "1/3", "-22/7", "123456789012345678901234567890/11"})
    EXPECT_EQ(to_string(parse_rational(s)), s);
}

TEST(Rational, DyadicRoundingIsWithinHalfUlp) {
  const Real third = Real(1) / 3;
  const Rational r = round_dyadic(third, 20);
  EXPECT_EQ(r.get_den(), Integer(1) << 20);
  EXPECT_LE(abs(to_real(r) - third), Real(1) / Real(1 << 21));
  EXPECT_EQ(round_dyadic(Real(-2.5), 1), Rational(-5, 2));
}

TEST(Rational, PrimitiveIntegerVector) {
  EXPECT_EQ(primitive_integer(V({4, -6, 2})), V({2, -3, 1}));
  EXPECT_EQ(primitive_integer(RatVector{Q("1/2"), Q("1/3")}), V({3, 2}));
  EXPECT_EQ(lcm_of_denominators(RatVector{Q("1/4"), Q("5/6"), Q("2")}), Integer(12));
}

TEST(Rational, DeterminantAndSolve) {
  RatMatrix m{V({2, 1, 0}), V({1, 3, 1}), V({0, 1, 4})};
  EXPECT_EQ(determinant(m), Rational(18));
  auto s = solve(m, V({1, 2, 3}));
  ASSERT_EQ(s.status, SolveStatus::Unique);
  RatVector check(3);
  for (int i = 0; i < 3; ++i) check[i] = dot(m[i], s.x);
  EXPECT_EQ(check, V({1, 2, 3}));

  EXPECT_EQ(solve({V({1, 1}), V({2, 2})}, V({1, 3})).status, SolveStatus::Inconsistent);
  EXPECT_EQ(solve({V({1, 1}), V({2, 2})}, V({1, 2})).status, SolveStatus::Underdetermined);
}

TEST(Rational, NullspaceAndInverse) {
  RatMatrix a{V({1, 1, 1, 1}), V({0, 1, 0, 1})};
  auto ns = nullspace(a, 4);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    EXPECT_EQ(dot(a[0], v), 0);
    EXPECT_EQ(dot(a[1], v), 0);
  }
  RatMatrix m{V({2, 1}), V({7, 4})};
  auto inv = inverse(m);
  EXPECT_EQ(inv[0], V({4, -1}));
  EXPECT_EQ(inv[1], V({-7, 2}));
}

TEST(Rational, AffineDimensionAndRank) {
  EXPECT_EQ(affine_dimension({}), -1);
  EXPECT_EQ(affine_dimension(points({{1, 1}})), 0);
  EXPECT_EQ(affine_dimension(points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})), 2);
  EXPECT_EQ(rank({V({1, 2}), V({2, 4})}), 1u);
}

TEST(Rational, ToIntRejectsFractions) {
  EXPECT_EQ(to_int(V({3, -4})), (IntVector{3, -4}));
  EXPECT_THROW(to_int(RatVector{Q("1/2")}), Error);
}
