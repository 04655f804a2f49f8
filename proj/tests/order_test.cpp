#include <gtest/gtest.h>

#include "support.hpp"

namespace weylsb {
namespace {

using testing::H;
using testing::HI;
using testing::M;
using testing::q;
using testing::W;

TEST(LinearFormTest, RejectsInadmissibleWeights) {
  EXPECT_THROW(LinearForm({-2}, {1}), std::invalid_argument);
  EXPECT_THROW(LinearForm({0, 0}, {1}), std::invalid_argument);
  EXPECT_NO_THROW(LinearForm({-1}, {1}));
}

TEST(LinearFormTest, NamedForms) {
  EXPECT_EQ(LinearForm::v_form(2), LinearForm({0, -1}, {0, 1}));
  EXPECT_EQ(LinearForm::order_form(2), LinearForm({0, 0}, {1, 1}));
  EXPECT_EQ(LinearForm::bernstein(1), LinearForm({1}, {1}));
  EXPECT_EQ(LinearForm::l_form(2, 1, 1), LinearForm({0, -1}, {1, 2}));
  EXPECT_EQ(LinearForm::multi_filtration(3, 1, {2}), LinearForm({-2, 0, 0}, {3, 1, 1}));
}

TEST(LambdaValueTest, Examples) {
  EXPECT_EQ(lambda_value(LinearForm::order_form(1), M({3}, {2})), 2);
  EXPECT_EQ(lambda_value(LinearForm::v_form(1), M({2}, {1})), -1);
  EXPECT_EQ(lambda_value(LinearForm::bernstein(2), M({0, 0}, {0, 0})), 0);
}

TEST(LambdaValueTest, OverflowIsReported) {
  const LinearForm big({INT64_MAX / 2}, {0});
  EXPECT_THROW(lambda_value(big, M({4}, {0})), std::overflow_error);
  EXPECT_EQ(big.value_wide(M({4}, {0})), static_cast<WideInt>(INT64_MAX / 2) * 4);
}

TEST(DeltaValueTest, Examples) {
  EXPECT_EQ(delta_value(LinearForm::v_form(1), weyl_constant(1, Scalar(1)) + W({2}, {1})), ExtendedInt(0));
  EXPECT_EQ(delta_value(LinearForm::v_form(1), weyl_constant(1, q(-4))), ExtendedInt(0));
  EXPECT_EQ(delta_value(LinearForm::order_form(1), W({3}, {2}) + W({0}, {5})), ExtendedInt(5));
  EXPECT_TRUE(delta_value(LinearForm::order_form(1), WeylOperator(1)).is_neg_infinity());
}

TEST(CompareDeltaTest, Examples) {
  const OrderContext order(LinearForm::order_form(1));
  EXPECT_TRUE(order.compare_delta(M({1}, {0}), M({0}, {1})) < 0);
  EXPECT_TRUE(order.compare_delta(M({3}, {1}), M({3}, {1})) == 0);
  const OrderContext v(LinearForm::v_form(1), TieBreak(1, MonomialOrder::deglex));
  EXPECT_TRUE(v.compare_delta(M({0}, {0}), M({2}, {1})) > 0);
}

TEST(CompareLTest, Examples) {
  const OrderContext order(LinearForm::order_form(1));
  EXPECT_TRUE(order.compare_L(HI(0, {0}, {0}), HI(0, {0}, {1})) < 0);
  EXPECT_TRUE(order.compare_L(HI(0, {0}, {0}), HI(1, {0}, {0})) < 0);
  EXPECT_TRUE(order.compare_L(HI(2, {0}, {0}), HI(0, {1}, {1})) < 0);
  EXPECT_TRUE(order.compare_L(HI(1, {0}, {0}), HI(0, {0}, {2})) < 0);
}

TEST(TieBreakTest, DefaultVariableOrder) {
  const TieBreak lex(1, MonomialOrder::lex);
  // x1 < D1
  EXPECT_TRUE(lex.compare(M({5}, {0}), M({0}, {1})) < 0);
  const TieBreak drl(2);
  // degrevlex: equal degree, the one with more of the smallest variable x1 is smaller.
  EXPECT_TRUE(drl.compare(M({1, 0}, {0, 1}), M({0, 1}, {0, 1})) < 0);
  EXPECT_THROW(TieBreak(MonomialOrder::lex, {0, 0}), std::invalid_argument);
  EXPECT_EQ(parse_monomial_order("deglex"), MonomialOrder::deglex);
  EXPECT_THROW(parse_monomial_order("grevlex!"), std::invalid_argument);
}

TEST(TieBreakPropertyTest, TotalAdditiveZeroMinimal) {
  OperatorSampler s(11);
  for (int c = 0; c < 300; ++c) {
    const std::size_t n = s.uniform(1, 3);
    const TieBreak tb = s.tiebreak(n);
    const auto a = s.monomial(n, 5), b = s.monomial(n, 5), d = s.monomial(n, 5);
    const auto ab = tb.compare(a, b);
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_EQ(tb.compare(b, a), 0 <=> ab);
    ASSERT_EQ(tb.compare(a + d, b + d), ab);
    if (!a.is_zero()) ASSERT_TRUE(tb.compare(MultiIndex(n), a) < 0);
    if (ab < 0 && tb.compare(b, d) < 0) ASSERT_TRUE(tb.compare(a, d) < 0);
  }
}

TEST(OrderPropertyTest, DeltaAndLLaws) {
  OperatorSampler s(12);
  for (int c = 0; c < 300; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const OrderContext ctx(s.linear_form(n, 3), s.tiebreak(n));
    const auto a = s.monomial(n, 5), b = s.monomial(n, 5), d = s.monomial(n, 5);
    const auto ab = ctx.compare_delta(a, b);
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_EQ(ctx.compare_delta(b, a), 0 <=> ab);
    ASSERT_EQ(ctx.compare_delta(a + d, b + d), ab);
    if (ab < 0 && ctx.compare_delta(b, d) < 0) ASSERT_TRUE(ctx.compare_delta(a, d) < 0);

    const auto ha = s.homog_monomial(n, 5), hb = s.homog_monomial(n, 5), hd = s.homog_monomial(n, 5);
    const auto hab = ctx.compare_L(ha, hb);
    ASSERT_EQ(hab == 0, ha == hb);
    ASSERT_EQ(ctx.compare_L(hb, ha), 0 <=> hab);
    ASSERT_EQ(ctx.compare_L(ha + hd, hb + hd), hab);
    if (hab < 0 && ctx.compare_L(hb, hd) < 0) ASSERT_TRUE(ctx.compare_L(ha, hd) < 0);
    if (!ha.is_zero()) ASSERT_TRUE(ctx.compare_L(HomogIndex(n), ha) < 0);
  }
}

TEST(OrderPropertyTest, DescendingLChainsTerminate) {
  // Random strictly descending walks inside degree <= 6 must stop: the set is finite
  // and each step picks something strictly smaller.
  OperatorSampler s(13);
  for (int c = 0; c < 20; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const OrderContext ctx(s.linear_form(n, 3), s.tiebreak(n));
    std::vector<HomogIndex> pool;
    for (std::uint64_t d = 0; d <= 6; ++d) {
      for (auto& e : homog_monomials_of_degree(n, d)) pool.push_back(e);
    }
    HomogIndex cur = s.homog_monomial_of_degree(n, 6);
    std::size_t steps = 0;
    while (true) {
      std::vector<HomogIndex> smaller;
      for (const auto& e : pool) {
        if (ctx.compare_L(e, cur) < 0) smaller.push_back(e);
      }
      if (smaller.empty()) break;
      cur = smaller[s.uniform(0, smaller.size() - 1)];
      ASSERT_LE(++steps, pool.size());
    }
    EXPECT_TRUE(cur.is_zero());
  }
}

TEST(ExpDeltaTest, Examples) {
  const OrderContext v(LinearForm::v_form(1));
  const auto p = weyl_constant(1, Scalar(1)) + W({2}, {1});
  const auto lead = exp_delta(v, p);
  EXPECT_EQ(lead.exponent, M({0}, {0}));
  EXPECT_EQ(lead.coefficient, Scalar(1));
  const auto mono = exp_delta(v, W({3}, {1}, q(-2, 3)));
  EXPECT_EQ(mono.exponent, M({3}, {1}));
  EXPECT_EQ(mono.coefficient, q(-2, 3));
  try {
    exp_delta(v, WeylOperator(1));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "no exponent of zero");
  }
}

TEST(ExpHomogTest, Examples) {
  const OrderContext v(LinearForm::v_form(1));
  EXPECT_EQ(exp_homog(v, homog_t(1, 3) + H(0, {2}, {1})).exponent, HI(3, {0}, {0}));
  const auto tk = exp_homog(v, H(4, {0}, {0}, q(5)));
  EXPECT_EQ(tk.exponent, HI(4, {0}, {0}));
  EXPECT_EQ(tk.coefficient, q(5));
  EXPECT_THROW(exp_homog(v, HomogOperator(1)), std::domain_error);
}

TEST(SymbolTest, Examples) {
  const LinearForm v = LinearForm::v_form(1);
  EXPECT_EQ(symbol(v, weyl_constant(1, Scalar(1)) + W({2}, {1})), weyl_constant(1, Scalar(1)));
  EXPECT_EQ(symbol(v, W({1}, {3}, q(2))), W({1}, {3}, q(2)));
  const auto p = W({0}, {2}) + W({1}, {1}) + weyl_constant(1, Scalar(1));
  EXPECT_EQ(symbol(LinearForm::order_form(1), p), W({0}, {2}));
  EXPECT_THROW(symbol(v, WeylOperator(1)), std::domain_error);
}

TEST(GradedCommutativeTest, Examples) {
  EXPECT_TRUE(is_graded_commutative(LinearForm::bernstein(3)));
  EXPECT_TRUE(is_graded_commutative(LinearForm::order_form(2)));
  EXPECT_FALSE(is_graded_commutative(LinearForm::v_form(2)));
}

// Product and sum laws of delta-exponents, exact on random nonzero operands.
TEST(ExponentPropertyTest, ProductAndSumLaws) {
  OperatorSampler s(14);
  for (int c = 0; c < 250; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const OrderContext ctx(s.linear_form(n, 3), s.tiebreak(n));
    const auto& form = ctx.lambda();
    const auto p = s.nonzero_weyl(n, 4, 4), r = s.nonzero_weyl(n, 4, 4);
    const auto pr = p * r;
    ASSERT_FALSE(pr.is_zero());

    // Product law, with leading coefficients multiplying.
    const auto lp = exp_delta(ctx, p), lr = exp_delta(ctx, r), lpr = exp_delta(ctx, pr);
    ASSERT_EQ(lpr.exponent, lp.exponent + lr.exponent);
    ASSERT_EQ(lpr.coefficient, lp.coefficient * lr.coefficient);
    ASSERT_EQ(delta_value(form, pr), delta_value(form, p) + delta_value(form, r));

    // Sum laws.
    const auto sum = p + r;
    ASSERT_LE(delta_value(form, sum), std::max(delta_value(form, p), delta_value(form, r)));
    const auto cmp = ctx.compare_delta(lp.exponent, lr.exponent);
    if (cmp != 0) {
      const auto& top = cmp > 0 ? lp : lr;
      ASSERT_EQ(exp_delta(ctx, sum).exponent, top.exponent);
      ASSERT_EQ(exp_delta(ctx, sum).coefficient, top.coefficient);
    } else if (!(lp.coefficient + lr.coefficient).is_zero()) {
      ASSERT_EQ(exp_delta(ctx, sum).exponent, lp.exponent);
      ASSERT_EQ(exp_delta(ctx, sum).coefficient, lp.coefficient + lr.coefficient);
    } else if (!sum.is_zero()) {
      ASSERT_TRUE(ctx.compare_delta(exp_delta(ctx, sum).exponent, lp.exponent) < 0);
    }

    // Monomial multiple of a homogeneous operator.
    const auto h = s.homog(n, 4, 4);
    const auto m = s.homog_monomial(n, 3);
    const auto mh = HomogOperator::monomial(m) * h;
    ASSERT_EQ(exp_homog(ctx, mh).exponent, m + exp_homog(ctx, h).exponent);
  }
}

TEST(SymbolPropertyTest, LeadingExponentOfSymbolUnderTieBreak) {
  OperatorSampler s(15);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = s.uniform(1, 2);
    const OrderContext ctx(s.linear_form(n, 3), s.tiebreak(n));
    const auto p = s.nonzero_weyl(n, 4, 5);
    const auto sym = symbol(ctx, p);
    MultiIndex best = sym.terms().begin()->first;
    for (const auto& [m, coeff] : sym.terms()) {
      if (ctx.tiebreak().compare(m, best) > 0) best = m;
    }
    ASSERT_EQ(best, exp_delta(ctx, p).exponent);
    for (const auto& [m, coeff] : sym.terms()) {
      ASSERT_EQ(ExtendedInt(lambda_value(ctx.lambda(), m)), delta_value(ctx.lambda(), p));
    }
  }
}

TEST(GradedCommutativityPropertyTest, CommutatorDropsFiltrationLevel) {
  OperatorSampler s(16);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = s.uniform(1, 2);
    LinearForm form = s.linear_form(n, 3);
    if (!is_graded_commutative(form)) form = LinearForm::bernstein(n);
    const auto p = s.nonzero_weyl(n, 4, 4), r = s.nonzero_weyl(n, 4, 4);
    const auto comm = p * r - r * p;
    if (comm.is_zero()) continue;
    ASSERT_LT(delta_value(form, comm), delta_value(form, p) + delta_value(form, r));
  }
}

}  // namespace
}  // namespace weylsb
