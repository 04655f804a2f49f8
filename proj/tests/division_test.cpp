#include <gtest/gtest.h>

#include "support.hpp"

namespace weylsb {
namespace {

using testing::H;
using testing::HI;
using testing::q;

TEST(DeltaPartitionTest, FirstCornerWins) {
  const DeltaPartition part({HI(0, {1}, {0}), HI(0, {0}, {1}), HI(0, {1}, {1})});
  EXPECT_EQ(part.region(HI(0, {1}, {1})), 0U);
  EXPECT_EQ(part.region(HI(3, {0}, {2})), 1U);
  EXPECT_EQ(part.region(HI(2, {0}, {0})), std::nullopt);
}

TEST(DivideTest, DxByD) {
  const OrderContext ctx(LinearForm::order_form(1));
  const auto h = homog_d(1, 0) * homog_x(1, 0);  // xD + t^2
  const std::vector<HomogOperator> divisors{homog_d(1, 0)};
  const auto r = divide(ctx, h, divisors);
  ASSERT_EQ(r.quotients.size(), 1U);
  EXPECT_EQ(r.quotients[0], homog_x(1, 0));
  EXPECT_EQ(r.remainder, homog_t(1, 2));
  EXPECT_EQ(check_division(ctx, h, divisors, r), std::nullopt);
}

TEST(DivideTest, SelfDivision) {
  const OrderContext ctx(LinearForm::v_form(1));
  const auto p = homog_t(1, 3) + H(0, {2}, {1}, q(-2));
  const std::vector<HomogOperator> divisors{p};
  const auto r = divide(ctx, p, divisors);
  EXPECT_EQ(r.quotients[0], homog_constant(1, Scalar(1)));
  EXPECT_TRUE(r.remainder.is_zero());
}

TEST(DivideTest, TSquaredIsItsOwnRemainder) {
  const OrderContext ctx(LinearForm::order_form(1));
  const std::vector<HomogOperator> divisors{homog_x(1, 0), homog_d(1, 0)};
  const auto r = divide(ctx, homog_t(1, 2), divisors);
  EXPECT_TRUE(r.quotients[0].is_zero());
  EXPECT_TRUE(r.quotients[1].is_zero());
  EXPECT_EQ(r.remainder, homog_t(1, 2));
}

TEST(DivideTest, EmptyDivisorList) {
  const OrderContext ctx(LinearForm::order_form(1));
  const auto h = H(1, {1}, {0}) + H(0, {0}, {2});
  const auto r = divide(ctx, h, {});
  EXPECT_TRUE(r.quotients.empty());
  EXPECT_EQ(r.remainder, h);
}

TEST(DivideTest, ZeroDivisorRejected) {
  const OrderContext ctx(LinearForm::order_form(1));
  const std::vector<HomogOperator> divisors{homog_x(1, 0), HomogOperator(1)};
  EXPECT_THROW(divide(ctx, homog_t(1), divisors), std::invalid_argument);
}

TEST(ReducesToZeroTest, Examples) {
  const OrderContext ctx(LinearForm::order_form(1));
  const auto p = homog_x(1, 0) + homog_t(1);
  const std::vector<HomogOperator> one{p};
  EXPECT_TRUE(reduces_to_zero(ctx, homog_x(1, 0) * p, one));
  EXPECT_FALSE(reduces_to_zero(ctx, H(0, {0}, {3}), one));
  const std::vector<HomogOperator> three{homog_x(1, 0), homog_d(1, 0), homog_t(1, 2)};
  EXPECT_TRUE(reduces_to_zero(ctx, homog_t(1, 2), three));
}

// Random homogeneous divisors of degree 1..3 in n <= 2 variables.
std::vector<HomogOperator> random_divisors(OperatorSampler& s, std::size_t n) {
  std::vector<HomogOperator> divisors;
  const std::size_t count = s.uniform(1, 3);
  for (std::size_t i = 0; i < count; ++i) divisors.push_back(s.homogeneous(n, s.uniform(1, 3), 3));
  return divisors;
}

TEST(DividePropertyTest, CertificatesDeterminismHomogeneity) {
  OperatorSampler s(31);
  for (int c = 0; c < 150; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const OrderContext ctx(s.linear_form(n, 3), s.tiebreak(n));
    auto divisors = random_divisors(s, n);
    const auto h = s.homogeneous(n, s.uniform(2, 5), 5);
    const auto r = divide(ctx, h, divisors);
    ASSERT_EQ(check_division(ctx, h, divisors, r), std::nullopt);
    const auto again = divide(ctx, h, divisors);
    ASSERT_EQ(again.remainder, r.remainder);
    ASSERT_EQ(again.quotients, r.quotients);
    const auto deg = *graded_degree(h);
    if (!r.remainder.is_zero()) ASSERT_EQ(graded_degree(r.remainder), deg);
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (r.quotients[i].is_zero()) continue;
      ASSERT_EQ(*graded_degree(r.quotients[i]) + *graded_degree(divisors[i]), deg);
    }
    // Permuted divisors still satisfy the certificates for the permuted order.
    std::reverse(divisors.begin(), divisors.end());
    ASSERT_EQ(check_division(ctx, h, divisors, divide(ctx, h, divisors)), std::nullopt);
  }
}

TEST(DividePropertyTest, UniquenessProbe) {
  OperatorSampler s(32);
  int probes = 0;
  while (probes < 120) {
    const std::size_t n = s.uniform(1, 2);
    const OrderContext ctx(s.linear_form(n, 3), s.tiebreak(n));
    const auto divisors = random_divisors(s, n);
    std::vector<HomogIndex> corners;
    for (const auto& p : divisors) corners.push_back(exp_homog(ctx, p).exponent);
    const DeltaPartition part(corners);
    const std::uint64_t deg = s.uniform(3, 5);

    std::vector<HomogOperator> quotients(divisors.size(), HomogOperator(n));
    HomogOperator remainder(n);
    for (const auto& m : homog_monomials_of_degree(n, deg)) {
      if (!part.region(m) && s.coin(0.3)) remainder.add_term(m, s.coefficient());
    }
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto di = *graded_degree(divisors[i]);
      if (di > deg) continue;
      for (const auto& m : homog_monomials_of_degree(n, deg - di)) {
        if (part.region(m + corners[i]) == i && s.coin(0.3)) quotients[i].add_term(m, s.coefficient());
      }
    }
    HomogOperator h = remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) h += quotients[i] * divisors[i];
    const auto r = divide(ctx, h, divisors);
    ASSERT_EQ(r.quotients, quotients);
    ASSERT_EQ(r.remainder, remainder);
    ++probes;
  }
}

TEST(DividePropertyTest, PrimeField) {
  OperatorSampler s(33, Field::prime(101));
  for (int c = 0; c < 60; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const OrderContext ctx(s.linear_form(n, 2), s.tiebreak(n));
    const auto divisors = random_divisors(s, n);
    const auto h = s.homogeneous(n, 4, 5);
    ASSERT_EQ(check_division(ctx, h, divisors, divide(ctx, h, divisors)), std::nullopt);
  }
}

}  // namespace
}  // namespace weylsb
