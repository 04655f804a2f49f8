#include <gtest/gtest.h>

#include "support.hpp"

namespace weylsb {
namespace {

using testing::H;
using testing::HI;
using testing::q;
using testing::W;

TEST(HomogenizeTest, Examples) {
  const auto dx = weyl_d(1, 0) * weyl_x(1, 0);
  EXPECT_EQ(homogenize(dx), H(0, {1}, {1}) + homog_t(1, 2));
  EXPECT_EQ(homogenize(W({0}, {2}) + W({1}, {0})), H(0, {0}, {2}) + H(1, {1}, {0}));
  const auto p = weyl_constant(1, Scalar(1)) + W({2}, {1});
  EXPECT_EQ(homogenize(p), homog_t(1, 3) + H(0, {2}, {1}));
  EXPECT_EQ(dehomogenize(homogenize(p)), p);
}

TEST(HomogenizeTest, ZeroIsAnError) {
  try {
    homogenize(WeylOperator(2));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "homogenization of zero undefined");
  }
}

TEST(DehomogenizeTest, Examples) {
  EXPECT_EQ(dehomogenize(homog_t(1, 3) + H(0, {2}, {1})), weyl_constant(1, Scalar(1)) + W({2}, {1}));
  EXPECT_EQ(dehomogenize(H(5, {1}, {2}, q(3))), W({1}, {2}, q(3)));
  EXPECT_EQ(dehomogenize(H(2, {1}, {0}) + H(1, {1}, {0})), W({1}, {0}, q(2)));
  EXPECT_TRUE(dehomogenize(HomogOperator(1)).is_zero());
  EXPECT_TRUE(dehomogenize(H(2, {1}, {0}) - H(0, {1}, {0})).is_zero());
}

TEST(GradedDegreeTest, Examples) {
  EXPECT_EQ(graded_degree(H(0, {1}, {1}) + homog_t(1, 2)), 2U);
  EXPECT_EQ(graded_degree(homog_t(1) + H(0, {2}, {0})), std::nullopt);
  EXPECT_EQ(graded_degree(homog_constant(1, q(3))), 0U);
  EXPECT_THROW(graded_degree(HomogOperator(1)), std::domain_error);
  EXPECT_TRUE(is_homogeneous(H(0, {1}, {1}) + homog_t(1, 2)));
  EXPECT_FALSE(is_homogeneous(homog_t(1) + H(0, {2}, {0})));
}

TEST(HomogenizePropertyTest, RoundTripAndMultiplicativity) {
  OperatorSampler s(21);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const auto p = s.nonzero_weyl(n, 4, 4), r = s.nonzero_weyl(n, 4, 4);
    const auto hp = homogenize(p);
    ASSERT_EQ(dehomogenize(hp), p);
    ASSERT_EQ(graded_degree(hp), static_cast<std::uint64_t>(total_order(p).value()));
    ASSERT_EQ(homogenize(p * r), hp * homogenize(r));
  }
}

TEST(HomogenizePropertyTest, SumLaw) {
  OperatorSampler s(22);
  int checked = 0;
  while (checked < 150) {
    const std::size_t n = s.uniform(1, 2);
    const auto p = s.nonzero_weyl(n, 4, 3), r = s.nonzero_weyl(n, 4, 3);
    const auto sum = p + r;
    if (sum.is_zero()) continue;
    const auto b = total_order(p).value(), c = total_order(r).value(), d = total_order(sum).value();
    const auto e = std::max(b, c);
    ASSERT_EQ(multiply_by_t(homogenize(sum), e - d),
              multiply_by_t(homogenize(p), e - b) + multiply_by_t(homogenize(r), e - c));
    ++checked;
  }
}

TEST(HomogenizePropertyTest, HomogeneousRestrictionRecoversTPower) {
  OperatorSampler s(23);
  for (int c = 0; c < 150; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const auto h = s.homogeneous(n, s.uniform(0, 5), 4);
    const auto r = dehomogenize(h);
    if (r.is_zero()) continue;
    const auto k = *graded_degree(h) - static_cast<std::uint64_t>(total_order(r).value());
    ASSERT_EQ(multiply_by_t(homogenize(r), static_cast<Exponent>(k)), h);
    ASSERT_EQ(t_adic_valuation(h), k);
  }
}

TEST(ProjectionPropertyTest, ExponentOfHomogenization) {
  OperatorSampler s(24);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const OrderContext ctx(s.linear_form(n, 3), s.tiebreak(n));
    const auto p = s.nonzero_weyl(n, 4, 5);
    ASSERT_EQ(project(exp_homog(ctx, homogenize(p)).exponent), exp_delta(ctx, p).exponent);
    const auto h = s.homogeneous(n, s.uniform(0, 4), 4);
    const auto r = dehomogenize(h);
    if (!r.is_zero()) ASSERT_EQ(project(exp_homog(ctx, h).exponent), exp_delta(ctx, r).exponent);
  }
}

}  // namespace
}  // namespace weylsb
