#include <gtest/gtest.h>

#include "ordgrp/error.hpp"
#include "ordgrp/free_magnus.hpp"

namespace ordgrp::magnus {
namespace {

FreeWord fw(std::vector<int> letters, int rank = 2) { return free_reduce(rank, std::move(letters)); }

const FreeWord x = fw({1});
const FreeWord y = fw({2});

MagnusSeries one(int cap) { return MagnusSeries::one(2, cap); }

TEST(FreeReduce, Examples) {
  EXPECT_TRUE(fw({1, -1}).empty());
  EXPECT_EQ(fw({1, 2, -2, 1}).letters, (std::vector<int>{1, 1}));
  EXPECT_EQ(fw({1, 2, -1, -2}).letters, (std::vector<int>{1, 2, -1, -2}));
}

TEST(Parse, RejectsOutOfBand) {
  EXPECT_EQ(parse_free_word("1 -2", 2), fw({1, -2}));
  EXPECT_THROW(parse_free_word("3", 2), Error);
  EXPECT_THROW(parse_free_word("a", 2), Error);
}

TEST(Expand, Examples) {
  EXPECT_EQ(magnus_expand(FreeWord{2, {}}, 3), one(3));
  for (int cap = 2; cap <= 6; ++cap) EXPECT_EQ(magnus_expand(FreeWord{2, {1, -1}}, cap), one(cap)) << cap;

  const auto c = magnus_expand(commutator(x, y), 2);
  MagnusSeries expected = one(2);
  expected.add({1, 2}, 1);
  expected.add({2, 1}, -1);
  EXPECT_EQ(c, expected);
  EXPECT_EQ(c.to_json(), json::parse(R"({"cap":2,"terms":[{"coef":1,"mono":[]},{"coef":1,"mono":[1,2]},)"
                                     R"({"coef":-1,"mono":[2,1]}]})"));
  EXPECT_THROW(magnus_expand(x, 0), Error);
}

TEST(Expand, InverseLetterIsAlternatingSeries) {
  const auto s = magnus_expand(fw({-1}), 4);
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(s.coefficient(Monomial(d, 1)), d % 2 == 0 ? 1 : -1);
}

TEST(Sign, Examples) {
  EXPECT_EQ(magnus_sign(x), Sign::Positive);
  EXPECT_EQ(magnus_sign(fw({-1, 2})), Sign::Negative);
  EXPECT_EQ(magnus_sign(commutator(x, y)), Sign::Positive);
  EXPECT_EQ(magnus_sign(FreeWord{2, {}}), Sign::Zero);
}

TEST(Sign, CeilingIsEnforced) {
  MagnusOptions tight{.initial_cap = 1, .cap_ceiling = 2};
  const auto deep = commutator(commutator(x, y), y);  // first term in degree 3
  try {
    magnus_sign(deep, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCeilingExceeded);
  }
}

TEST(Compare, Examples) {
  EXPECT_EQ(magnus_compare(x, x), Ordering::Equal);
  EXPECT_EQ(magnus_compare(y, x), Ordering::Less);
  EXPECT_EQ(magnus_compare(x, y), Ordering::Greater);
}

TEST(LcsDegree, Examples) {
  EXPECT_EQ(lcs_degree(x), 1);
  EXPECT_EQ(lcs_degree(commutator(x, y)), 2);
  EXPECT_EQ(lcs_degree(commutator(commutator(x, y), y)), 3);
  EXPECT_THROW(lcs_degree(FreeWord{2, {}}), Error);
}

// --- Properties on seeded samples ----------------------------------------------

TEST(Properties, ExpansionIsMultiplicativeUpToTruncation) {
  const auto s = sample_free_words(2, 120, 8, 101);
  for (std::size_t i = 0; i + 1 < s.elements.size(); ++i)
    for (int cap = 2; cap <= 4; ++cap) {
      const auto& u = s.elements[i];
      const auto& v = s.elements[i + 1];
      EXPECT_EQ(magnus_expand(multiply(u, v), cap), magnus_expand(u, cap) * magnus_expand(v, cap));
    }
}

TEST(Properties, InverseHasOppositeSign) {
  const auto s = sample_free_words(3, 200, 8, 102);
  for (const auto& w : s.elements) {
    if (w.empty()) continue;
    const Sign a = magnus_sign(w);
    EXPECT_NE(a, Sign::Zero);
    EXPECT_EQ(magnus_sign(inverse(w)), negate(a));
  }
}

TEST(Properties, SignIsConjugationInvariant) {
  const auto s = sample_free_words(2, 200, 6, 103);
  for (std::size_t i = 0; i + 1 < s.elements.size(); ++i) {
    const auto& g = s.elements[i];
    const auto& w = s.elements[i + 1];
    EXPECT_EQ(magnus_sign(multiply(multiply(g, w), inverse(g))), magnus_sign(w));
  }
}

TEST(Properties, LowerCentralFiltration) {
  const auto s = sample_free_words(2, 150, 6, 104);
  for (std::size_t i = 0; i + 1 < s.elements.size(); ++i) {
    const auto& u = s.elements[i];
    const auto& v = s.elements[i + 1];
    if (u.empty() || v.empty()) continue;
    const int du = lcs_degree(u), dv = lcs_degree(v);
    const auto uv = multiply(u, v);
    if (!uv.empty()) EXPECT_GE(lcs_degree(uv), std::min(du, dv));
    const auto c = commutator(u, v);
    if (!c.empty()) EXPECT_GE(lcs_degree(c), du + dv);
  }
}

TEST(Properties, BiInvariantAndConradian) {
  const auto s = sample_free_words(2, 150, 8, 105);
  const MagnusOracle oracle(2);
  EXPECT_TRUE(verify_order_laws(oracle, std::span(s.elements)).ok());
  EXPECT_TRUE(verify_bi_invariance(oracle, std::span(s.elements)).ok());
  EXPECT_TRUE(conradian_check(oracle, std::span(s.elements)).pass());
}

}  // namespace
}  // namespace ordgrp::magnus
