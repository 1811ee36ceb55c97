#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "ordgrp/error.hpp"
#include "ordgrp/quotient.hpp"
#include "ordgrp/rewriting.hpp"
#include "ordgrp/smith.hpp"

namespace ordgrp::pres {
namespace {

using ordgrp::testing::bundled;

// --- Words and parsing -----------------------------------------------------------

TEST(Words, Operations) {
  EXPECT_EQ(free_reduce("abBA"), "");
  EXPECT_EQ(free_reduce("aAbab"), "bab");
  EXPECT_EQ(cyclic_reduce("abA"), "b");
  EXPECT_EQ(inverse("abC"), "cBA");
  EXPECT_EQ(concat("ab", "Bc"), "ac");
  EXPECT_EQ(power("ab", 2), "abab");
  EXPECT_EQ(power("ab", -1), "BA");
  EXPECT_EQ(power("ab", 0), "");
  EXPECT_EQ(commutator("a", "b"), "abAB");
  EXPECT_EQ(conjugate("x", "y"), "Yxy");
  EXPECT_EQ(rotate("abc", 1), "bca");
}

TEST(Parse, LineFormat) {
  const auto p = parse_presentation(
      "# comment\n"
      "generators: a b\n"
      "relation: babab = aBBa\n"
      "relator: a b A B\n");
  EXPECT_EQ(p.generators, (std::vector<char>{'a', 'b'}));
  ASSERT_EQ(p.relators.size(), 2u);
  EXPECT_EQ(p.relators[0], free_reduce(concat("babab", inverse("aBBa"))));
  EXPECT_EQ(p.relators[1], "abAB");
  EXPECT_EQ(parse_presentation_any(to_json(p).dump()).relators, p.relators);
  EXPECT_EQ(parse_presentation(format_presentation(p)).relators, p.relators);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_presentation("generators: a\nrelator: ab\n"), Error);
  EXPECT_THROW(make_presentation({'a', 'a'}, {}), Error);
  const auto p = bundled("trefoil");
  EXPECT_EQ(parse_word("1", p), "");
  EXPECT_EQ(parse_word("a A b", p), "b");
  EXPECT_THROW(parse_word("c", p), Error);
}

TEST(Parse, BundledFiles) {
  for (const char* name : {"weeks", "brieskorn237", "trefoil", "klein", "braid3", "cyclic2"})
    EXPECT_NO_THROW(bundled(name)) << name;
  EXPECT_EQ(bundled("klein").generators, (std::vector<char>{'x', 'y'}));
}

TEST(Words, Enumeration) {
  const auto p = bundled("trefoil");
  EXPECT_EQ(alphabet(p), (std::vector<char>{'a', 'A', 'b', 'B'}));
  const auto ws = enumerate_words(p, 2);
  EXPECT_EQ(ws.size(), 4u + 12u);
  EXPECT_EQ(ws.front(), "a");
  EXPECT_EQ(ws[4], "aa");
  for (const auto& w : ws) EXPECT_EQ(free_reduce(w), w);
}

// --- Smith normal form -------------------------------------------------------------

std::int64_t gcd_all(const IntMatrix& a) {
  std::int64_t g = 0;
  for (const auto& row : a)
    for (auto x : row) g = std::gcd(g, x);
  return g;
}

TEST(Smith, SeededRandomMatrices) {
  Rng rng(301);
  for (int t = 0; t < 100; ++t) {
    const auto rows = 1 + uniform_below(rng, 4);
    const auto cols = 1 + uniform_below(rng, 4);
    IntMatrix a(rows, std::vector<std::int64_t>(cols));
    for (auto& row : a)
      for (auto& x : row) x = uniform_int(rng, -9, 9);
    const auto s = smith_normal_form(a);
    ASSERT_TRUE(check_smith(a, s)) << t;
    EXPECT_EQ(multiply(multiply(s.U, a, rows), s.V, cols), s.D);
    // The first invariant factor is the gcd of all entries.
    const auto d = s.diagonal();
    if (!d.empty()) EXPECT_EQ(d[0], gcd_all(a));
  }
}

TEST(Smith, TwoByTwoMatchesGcdOracle) {
  // For a 2x2 matrix: d1 = gcd of entries, d1 * d2 = |det|.
  Rng rng(302);
  for (int t = 0; t < 300; ++t) {
    IntMatrix a{{uniform_int(rng, -9, 9), uniform_int(rng, -9, 9)}, {uniform_int(rng, -9, 9), uniform_int(rng, -9, 9)}};
    const auto s = smith_normal_form(a);
    const auto g = gcd_all(a);
    const auto det = std::abs(a[0][0] * a[1][1] - a[0][1] * a[1][0]);
    const std::int64_t d1 = s.D[0][0], d2 = s.D[1][1];
    EXPECT_EQ(d1, g);
    if (g != 0) EXPECT_EQ(d1 * d2, det);
    else EXPECT_EQ(d2, 0);
  }
}

TEST(Smith, TamperedFormIsRejected) {
  const IntMatrix a{{2, 4}, {6, 8}};
  auto s = smith_normal_form(a);
  ASSERT_TRUE(check_smith(a, s));
  s.U[0][0] += 1;
  EXPECT_FALSE(check_smith(a, s));
}

TEST(Smith, OverflowIsReported) {
  const std::int64_t big = std::int64_t{1} << 62;
  const IntMatrix a{{big, big - 1}, {big - 1, big}};
  try {
    smith_normal_form(a);
    SUCCEED();  // small enough after all
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoefficientOverflow);
  }
}

TEST(Abelianization, Examples) {
  EXPECT_EQ(exponent_matrix(bundled("weeks")), (IntMatrix{{0, 5}, {5, 0}}));
  EXPECT_EQ(abelianization(bundled("weeks")), (Abelianization{0, {5, 5}}));
  EXPECT_TRUE(abelianization(bundled("brieskorn237")).trivial());
  EXPECT_EQ(abelianization(bundled("trefoil")), (Abelianization{1, {}}));
  EXPECT_EQ(abelianization(bundled("klein")), (Abelianization{1, {2}}));
  EXPECT_EQ(abelianization(bundled("braid3")), (Abelianization{1, {}}));
  EXPECT_EQ(to_json(Abelianization{0, {5, 5}}).dump(), R"({"rank":0,"torsion":[5,5]})");
}

TEST(RelationLattice, Membership) {
  const RelationLattice lat(bundled("weeks"));
  EXPECT_TRUE(lat.contains({5, 0}));
  EXPECT_TRUE(lat.contains({0, -10}));
  EXPECT_FALSE(lat.contains({1, 0}));
  EXPECT_TRUE(lat.contains({0, 0}));
}

// --- Moves and balls -----------------------------------------------------------------

TEST(Moves, ApplyAndChainReplay) {
  const auto p = bundled("cyclic2");  // <a | aa>
  const Move del{.relator = 0, .inverse = false, .rotation = 0, .split = 2, .position = 0};
  EXPECT_EQ(apply_move(p, "aab", del), "b");
  EXPECT_FALSE(apply_move(p, "ab", del).has_value());
  const Chain c{{del, false, "b"}};
  EXPECT_TRUE(check_chain(p, "aab", c));
  EXPECT_FALSE(check_chain(p, "ab", c));
  EXPECT_TRUE(check_chain(p, "b", Chain{{del, true, "aab"}}));
  EXPECT_EQ(move_from_json(to_json(del)), del);
  EXPECT_THROW(move_from_json(json{{"relator", 0}}), Error);
}

TEST(Ball, Examples) {
  const auto weeks = bundled("weeks");
  for (const auto& r : weeks.relators) {
    const auto b = rewrite_ball(r, weeks, r.size(), 1);
    EXPECT_NE(std::find(b.words.begin(), b.words.end(), ""), b.words.end());
  }
  const auto free1 = make_presentation({'a'}, {});
  EXPECT_EQ(rewrite_ball("a", free1, 5, 5).words, (std::vector<Word>{"a"}));

  const auto b = rewrite_ball("babab", weeks, 12, 1);
  EXPECT_EQ(b.words.front(), "babab");
  EXPECT_NE(std::find(b.words.begin(), b.words.end(), "aBBa"), b.words.end());
  for (const auto& w : b.words) EXPECT_EQ(free_reduce(w), w);
}

TEST(Prover, ChainsReplayAndLatticePrunes) {
  const auto p = bundled("braid3");
  const TrivialityProver prover(p, ProverBounds{.probe_slack = 2, .probe_steps = 6});
  const Word w = concat(power("ab", 3), inverse(power("ba", 3)));
  const auto chain = prover.prove_trivial(w);
  ASSERT_TRUE(chain.has_value());
  EXPECT_TRUE(check_chain(p, w, *chain));
  EXPECT_TRUE(chain->back().word.empty());
  EXPECT_FALSE(prover.prove_trivial("a").has_value());  // exponent sum rules it out
  const auto eq = prover.prove_equal("aba", "bab");
  ASSERT_TRUE(eq.has_value());
  EXPECT_TRUE(check_chain(p, concat("aba", inverse("bab")), *eq));
}

// --- Quotient witnesses -----------------------------------------------------------------

TEST(Quotient, Examples) {
  const auto trefoil = bundled("trefoil");
  const auto w = finite_quotient_witness(trefoil, "ab", "ba", 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->degree, 3);
  EXPECT_TRUE(check_witness(trefoil, *w));
  EXPECT_TRUE(satisfies_relators(trefoil, w->images));
  EXPECT_NE(evaluate("ab", trefoil, w->images), evaluate("ba", trefoil, w->images));

  const auto b3 = bundled("braid3");
  const auto wb = finite_quotient_witness(b3, "ab", "ba", 3);
  ASSERT_TRUE(wb.has_value());
  EXPECT_TRUE(check_witness(b3, *wb));

  const auto z2 = make_presentation({'a', 'b'}, {"abAB"});
  EXPECT_FALSE(finite_quotient_witness(z2, "a", "b", 4, SeparationMode::NonCommuting).has_value());
}

TEST(Quotient, JsonRoundTripAndTamper) {
  const auto trefoil = bundled("trefoil");
  const auto w = *finite_quotient_witness(trefoil, "ab", "ba", 3);
  json j = to_json(w, trefoil);
  EXPECT_EQ(j.at("images").at("a"), json::array({2, 1, 3}));
  EXPECT_EQ(j.at("images").at("b"), json::array({2, 3, 1}));
  EXPECT_TRUE(check_witness(trefoil, witness_from_json(j, trefoil)));
  j["images"]["b"] = json::array({1, 3, 2});
  EXPECT_FALSE(check_witness(trefoil, witness_from_json(j, trefoil)));
  j["images"]["b"] = json::array({1, 1, 2});
  EXPECT_FALSE(check_witness(trefoil, witness_from_json(j, trefoil)));
}

TEST(Quotient, PermutationHelpers) {
  const Perm p{1, 2, 0}, q{1, 0, 2};
  EXPECT_EQ(perm_then(p, perm_inverse(p)), perm_identity(3));
  EXPECT_EQ(perm_then(p, q), (Perm{0, 2, 1}));
  EXPECT_TRUE(is_permutation(p, 3));
  EXPECT_FALSE(is_permutation({0, 0, 1}, 3));
}

TEST(Properties, WitnessesSatisfyRelatorsExactly) {
  for (const char* name : {"weeks", "brieskorn237", "trefoil", "klein", "braid3"}) {
    const auto p = bundled(name);
    for (const auto& u : enumerate_words(p, 1)) {
      const auto w = finite_quotient_witness(p, u, "", 5);
      if (!w) continue;
      for (const auto& r : p.relators) EXPECT_EQ(evaluate(r, p, w->images), perm_identity(w->degree)) << name;
    }
  }
}

}  // namespace
}  // namespace ordgrp::pres
