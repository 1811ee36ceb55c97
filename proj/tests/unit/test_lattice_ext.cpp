#include <gtest/gtest.h>

#include "ordgrp/error.hpp"
#include "ordgrp/lattice_ext.hpp"

namespace ordgrp::lattice {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

WeightOrder single_weight(RationalVector w) {
  WeightOrder o = lex_order(w.size());
  o.weights = {std::move(w)};
  return o;
}

TEST(Zn, Examples) {
  EXPECT_EQ(zn_compare({0, 1}, {1, -5}, lex_order(2)), Ordering::Less);
  EXPECT_EQ(zn_sign({1, -1}, single_weight({Rational(2), Rational(3)})), Sign::Negative);
  EXPECT_EQ(zn_compare({3, -2}, {3, -2}, single_weight({Rational(2), Rational(3)})), Ordering::Equal);
  EXPECT_EQ(code_of([] { zn_compare({1}, {1, 2}, lex_order(2)); }), ErrorCode::DimensionMismatch);
}

TEST(Zn, TieBreakDecidesWhenWeightsVanish) {
  WeightOrder o = single_weight({Rational(1), Rational(1)});
  o.tie_break = {1, 0};
  EXPECT_EQ(zn_sign({-1, 1}, o), Sign::Positive);
  EXPECT_EQ(zn_sign({1, -1}, o), Sign::Negative);
}

TEST(Zn, WeightOrdersAreBiInvariantOnSmallBoxes) {
  const std::vector<WeightOrder> orders{lex_order(1), lex_order(2), single_weight({Rational(2), Rational(-3)}),
                                        single_weight({Rational(1, 2), Rational(0), Rational(-1)})};
  for (const auto& o : orders) {
    const auto box = integer_box(o.dimension, 3);
    const ZnOracle oracle(o);
    HarnessLimits limits;
    limits.exhaustive_triples = box.size() * box.size() * box.size();
    if (o.dimension == 3) limits.exhaustive_triples = 0;  // 343 elements: windows keep it quick
    EXPECT_TRUE(verify_order_laws(oracle, std::span<const IntVector>(box), limits).ok());
    EXPECT_TRUE(verify_bi_invariance(oracle, std::span<const IntVector>(box), limits).ok());
  }
}

TEST(Zn, ExhaustiveBiInvarianceInDimensionThree) {
  // Every (f, g, h) with g, h from the box and f from the unit shifts.
  const auto o = single_weight({Rational(1, 2), Rational(0), Rational(-1)});
  const auto box = integer_box(3, 3);
  const ZnOracle oracle(o);
  for (const auto& g : box)
    for (const auto& h : box) {
      const auto base = oracle.compare(g, h);
      for (const auto& f : integer_box(3, 1)) {
        ASSERT_EQ(oracle.compare(oracle.multiply(f, g), oracle.multiply(f, h)), base);
      }
    }
}

TEST(Perturb, LexWithOneConstraint) {
  const auto r = sikora_perturb(lex_order(2), {{1, 0}});
  ASSERT_FALSE(r.order.weights.empty());
  EXPECT_EQ(r.order.weights[0], (RationalVector{Rational(1), Rational(2)}));
  EXPECT_EQ(r.witness, (IntVector{1, -1}));
  EXPECT_EQ(zn_sign(r.witness, lex_order(2)), Sign::Positive);
  EXPECT_EQ(zn_sign(r.witness, r.order), Sign::Negative);
}

TEST(Perturb, Errors) {
  EXPECT_EQ(code_of([] { sikora_perturb(lex_order(2), {{0, 0}}); }), ErrorCode::ZeroConstraint);
  EXPECT_EQ(code_of([] { sikora_perturb(lex_order(2), {{-1, 0}}); }), ErrorCode::InfeasibleConstraints);
  EXPECT_EQ(code_of([] { sikora_perturb(lex_order(1), {}); }), ErrorCode::IsolatedOrder);
  EXPECT_EQ(code_of([] { sikora_perturb(lex_order(2), {{1, 0, 0}}); }), ErrorCode::DimensionMismatch);
}

TEST(Perturb, EmptyConstraintsGiveADistinctOrder) {
  const auto r = sikora_perturb(lex_order(2), {});
  EXPECT_NE(r.order, lex_order(2));
  EXPECT_NE(zn_sign(r.witness, lex_order(2)), zn_sign(r.witness, r.order));
}

TEST(Perturb, PostconditionsOnSeededConstraintSets) {
  Rng rng(77);
  int checked = 0;
  while (checked < 50) {
    const std::size_t n = 2 + uniform_below(rng, 2);
    WeightOrder order = lex_order(n);
    if (uniform_below(rng, 2) == 1) {
      RationalVector w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(Rational(uniform_int(rng, -3, 3)));
      if (std::all_of(w.begin(), w.end(), [](const Rational& q) { return q == 0; })) continue;
      order.weights.insert(order.weights.begin(), w);
    }
    std::vector<IntVector> cs;
    const auto count = uniform_below(rng, 4);
    while (cs.size() < count) {
      IntVector v;
      for (std::size_t i = 0; i < n; ++i) v.push_back(uniform_int(rng, -4, 4));
      if (zn_sign(v, order) == Sign::Positive) cs.push_back(v);
    }
    const auto r = sikora_perturb(order, cs);
    for (const auto& c : cs) {
      EXPECT_EQ(zn_sign(c, order), Sign::Positive);
      EXPECT_EQ(zn_sign(c, r.order), Sign::Positive);
    }
    EXPECT_NE(zn_sign(r.witness, order), zn_sign(r.witness, r.order));
    EXPECT_NE(zn_sign(r.witness, order), Sign::Zero);
    ++checked;
  }
}

TEST(WeightOrderJson, RoundTrip) {
  const auto o = single_weight({Rational(1, 2), Rational(-3)});
  EXPECT_EQ(weight_order_from_json(to_json(o)), o);
}

TEST(Klein, MultiplicationExamples) {
  EXPECT_EQ(klein_mul({1, 0}, {1, 0}), (KleinElement{2, 0}));
  EXPECT_EQ(klein_mul({0, 1}, {1, 0}), (KleinElement{-1, 1}));
  EXPECT_EQ(klein_inv({1, 1}), (KleinElement{1, -1}));
  EXPECT_EQ(klein_mul(klein_inv({1, 1}), {1, 1}), KleinElement{});
  EXPECT_EQ(klein_mul({1, 1}, klein_inv({1, 1})), KleinElement{});
}

TEST(Klein, DefiningRelationAndAssociativity) {
  const KleinElement xe{1, 0}, ye{0, 1};
  EXPECT_EQ(klein_mul(klein_mul(klein_inv(ye), xe), ye), klein_inv(xe));
  const auto box = klein_box(2);
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& c : box) ASSERT_EQ(klein_mul(klein_mul(a, b), c), klein_mul(a, klein_mul(b, c)));
}

TEST(Klein, CompareExamples) {
  EXPECT_EQ(klein_compare({5, 0}, {0, 1}), Ordering::Less);
  EXPECT_EQ(klein_compare({1, 0}, {2, 0}), Ordering::Less);
  EXPECT_EQ(klein_compare({1, 1}, {2, 1}), Ordering::Greater);
}

TEST(Klein, LeftInvariantExhaustivelyButNotRightInvariant) {
  const auto box = klein_box(4);
  const auto left = verify_left_invariance(KleinOracle{}, std::span<const KleinElement>(box));
  EXPECT_TRUE(left.ok());
  EXPECT_EQ(left.checked, box.size() * box.size() * box.size());
  const auto both = verify_bi_invariance(KleinOracle{}, std::span<const KleinElement>(box));
  EXPECT_GT(both.count("right"), 0u);
}

TEST(Klein, Json) {
  EXPECT_EQ(to_json(KleinElement{2, -1}), json::array({2, -1}));
  EXPECT_EQ(klein_from_json(json::array({2, -1})), (KleinElement{2, -1}));
}

TEST(Germ, Examples) {
  const GermElement a = make_germ(Rational(1), Rational(2));
  EXPECT_EQ(germ_mul(a, GermElement{}), a);
  EXPECT_EQ(germ_mul(a, make_germ(Rational(0), Rational(1))), a);
  EXPECT_EQ(germ_mul(a, make_germ(Rational(3), Rational(4))), make_germ(Rational(7), Rational(8)));
  EXPECT_EQ(germ_sign(make_germ(Rational(0), Rational(2))), Sign::Positive);
  EXPECT_EQ(germ_sign(make_germ(Rational(-3), Rational(1))), Sign::Negative);
  EXPECT_EQ(germ_mul(a, germ_inv(a)), GermElement{});
  EXPECT_EQ(code_of([] { make_germ(Rational(0), Rational(0)); }), ErrorCode::OutOfDomain);
}

TEST(Germ, BiInvariantOnSeededSamples) {
  const auto s = sample_germs(200, 12);
  EXPECT_TRUE(verify_bi_invariance(GermOracle{}, std::span(s.elements)).ok());
  EXPECT_TRUE(verify_order_laws(GermOracle{}, std::span(s.elements)).ok());
}

TEST(Germ, KernelIsOrderIsomorphicToAdditiveRationals) {
  const auto s = sample_germs(200, 13);
  std::vector<GermElement> kernel;
  for (const auto& g : s.elements)
    if (g.r == 1) kernel.push_back(g);
  ASSERT_GT(kernel.size(), 10u);
  for (const auto& a : kernel)
    for (const auto& b : kernel) {
      const Ordering expected = a.s < b.s ? Ordering::Less : a.s == b.s ? Ordering::Equal : Ordering::Greater;
      EXPECT_EQ(germ_compare(a, b), expected);
    }
}

TEST(Germ, Json) {
  const auto g = make_germ(Rational(-1, 3), Rational(5, 2));
  EXPECT_EQ(germ_from_json(to_json(g)), g);
}

}  // namespace
}  // namespace ordgrp::lattice
