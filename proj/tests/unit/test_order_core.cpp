#include <gtest/gtest.h>

#include <set>

#include "ordgrp/braid.hpp"
#include "ordgrp/free_magnus.hpp"
#include "ordgrp/lattice_ext.hpp"
#include "ordgrp/order_core.hpp"

namespace ordgrp {
namespace {

using lattice::IntVector;
using lattice::KleinElement;

TEST(Rng, UniformBelowIsDeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_below(a, 7);
    EXPECT_EQ(x, uniform_below(b, 7));
    EXPECT_LT(x, 7u);
  }
}

TEST(Rng, UniformIntCoversClosedRange) {
  Rng rng(1);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = uniform_int(rng, -3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(Report, SerializesCheckedAndViolations) {
  Report r;
  r.checked = 3;
  r.violations.push_back({"left", json::array({1, 2})});
  const json j = r.to_json();
  EXPECT_EQ(j.at("checked"), 3);
  ASSERT_EQ(j.at("violations").size(), 1u);
  EXPECT_EQ(j.at("violations")[0].at("kind"), "left");
  EXPECT_EQ(j.at("violations")[0].at("witness"), json::array({1, 2}));
  EXPECT_EQ(r.count("left"), 1u);
  EXPECT_EQ(r.count("right"), 0u);
}

TEST(Harness, KleinLeftInvariantExhaustivelyOnSmallBox) {
  const auto box = lattice::klein_box(2);
  const auto report = verify_left_invariance(lattice::KleinOracle{}, std::span<const KleinElement>(box));
  EXPECT_TRUE(report.ok()) << report.to_json();
  EXPECT_EQ(report.checked, box.size() * box.size() * box.size());
}

TEST(Harness, KleinRightInvarianceFailsWithTextbookWitness) {
  const std::vector<KleinElement> sample{{1, 0}, {2, 0}, {0, 1}};  // x, x^2, y
  const auto report = verify_bi_invariance(lattice::KleinOracle{}, std::span<const KleinElement>(sample));
  EXPECT_EQ(report.count("left"), 0u);
  ASSERT_GT(report.count("right"), 0u);
  bool found = false;
  for (const auto& v : report.violations)
    if (v.kind == "right" && v.witness == json::array({json::array({1, 0}), json::array({2, 0}), json::array({0, 1})}))
      found = true;
  EXPECT_TRUE(found) << report.to_json();
}

TEST(Harness, SingletonIdentityHasNoViolations) {
  const std::vector<KleinElement> one{{0, 0}};
  EXPECT_TRUE(verify_left_invariance(lattice::KleinOracle{}, std::span<const KleinElement>(one)).ok());
  EXPECT_TRUE(verify_order_laws(lattice::KleinOracle{}, std::span<const KleinElement>(one)).ok());
}

TEST(Harness, EmptySampleIsTrivialPass) {
  const std::vector<KleinElement> none;
  const auto r = verify_bi_invariance(lattice::KleinOracle{}, std::span<const KleinElement>(none));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 0u);
  EXPECT_TRUE(conradian_check(lattice::KleinOracle{}, std::span<const KleinElement>(none)).pass());
}

TEST(Harness, DehornoyLeftInvariantOnSeededB3) {
  const auto s = braid::sample_braids(3, 100, 8, 7);
  const braid::DehornoyOracle oracle(3);
  EXPECT_TRUE(verify_left_invariance(oracle, std::span(s.elements)).ok());
  EXPECT_TRUE(verify_order_laws(oracle, std::span(s.elements)).ok());
}

TEST(Harness, MagnusBiInvariantOnSeededF2) {
  const auto s = magnus::sample_free_words(2, 100, 8, 11);
  EXPECT_TRUE(verify_bi_invariance(magnus::MagnusOracle(2), std::span(s.elements)).ok());
}

TEST(Harness, WindowedModeChecksLinearlyManyTriples) {
  HarnessLimits limits;
  limits.exhaustive_triples = 10;
  const auto box = lattice::integer_box(2, 2);  // 25 elements, 15625 triples
  const auto r = verify_bi_invariance(lattice::ZnOracle(lattice::lex_order(2)), std::span<const IntVector>(box), limits);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, box.size());
}

TEST(Harness, LawViolationsAreDetected) {
  // An "order" that calls everything Less breaks antisymmetry and reflexivity.
  struct Broken {
    using Element = KleinElement;
    Ordering compare(const KleinElement&, const KleinElement&) const { return Ordering::Less; }
    KleinElement multiply(const KleinElement& a, const KleinElement& b) const { return lattice::klein_mul(a, b); }
    KleinElement invert(const KleinElement& a) const { return lattice::klein_inv(a); }
    KleinElement identity() const { return {}; }
    json to_json(const KleinElement& a) const { return lattice::to_json(a); }
  };
  static_assert(OrderOracle<Broken>);
  const auto box = lattice::klein_box(1);
  const auto r = verify_order_laws(Broken{}, std::span<const KleinElement>(box));
  EXPECT_GT(r.count("reflexive"), 0u);
  EXPECT_GT(r.count("antisymmetry"), 0u);
}

TEST(Conradian, BiOrdersPassOnTheirSamples) {
  const auto s = magnus::sample_free_words(2, 80, 6, 5);
  const magnus::MagnusOracle oracle(2);
  ASSERT_TRUE(verify_bi_invariance(oracle, std::span(s.elements)).ok());
  EXPECT_TRUE(conradian_check(oracle, std::span(s.elements)).pass());

  const auto box = lattice::integer_box(2, 3);
  EXPECT_TRUE(conradian_check(lattice::ZnOracle(lattice::lex_order(2)), std::span<const IntVector>(box)).pass());
}

TEST(RankEmbedding, LexTranslationIsMonotone) {
  const auto ball = lattice::integer_box(2, 2);
  const std::vector<IntVector> mult{{1, 0}};
  const auto r = rank_embedding_monotone(lattice::ZnOracle(lattice::lex_order(2)), std::span<const IntVector>(ball),
                                         std::span<const IntVector>(mult));
  EXPECT_TRUE(r.ok()) << r.to_json();
  EXPECT_GT(r.checked, 0u);
}

TEST(RankEmbedding, DehornoyBallWithSigma1IsMonotone) {
  const auto words = braid::enumerate_braid_words(3, 4);
  // Deduplicate group elements so the ball is pairwise distinct.
  const braid::DehornoyOracle oracle(3);
  std::vector<braid::BraidWord> ball;
  for (const auto& w : words) {
    bool dup = false;
    for (const auto& b : ball)
      if (oracle.compare(w, b) == Ordering::Equal) {
        dup = true;
        break;
      }
    if (!dup) ball.push_back(w);
  }
  const std::vector<braid::BraidWord> mult{braid::generator(3, 1)};
  const auto r = rank_embedding_monotone(oracle, std::span<const braid::BraidWord>(ball),
                                         std::span<const braid::BraidWord>(mult));
  EXPECT_TRUE(r.ok()) << r.to_json();
}

TEST(RankEmbedding, SingletonIsMonotone) {
  const std::vector<IntVector> ball{{0, 0}}, mult{{1, 0}};
  EXPECT_TRUE(rank_embedding_monotone(lattice::ZnOracle(lattice::lex_order(2)), std::span<const IntVector>(ball),
                                      std::span<const IntVector>(mult))
                  .ok());
}

TEST(RankEmbedding, DuplicatesAreReported) {
  const std::vector<IntVector> ball{{0, 0}, {0, 0}}, mult;
  const auto r = rank_embedding_monotone(lattice::ZnOracle(lattice::lex_order(2)), std::span<const IntVector>(ball),
                                         std::span<const IntVector>(mult));
  EXPECT_EQ(r.count("duplicate"), 1u);
}

}  // namespace
}  // namespace ordgrp
