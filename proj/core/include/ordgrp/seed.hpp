#pragma once

// Sign hypotheses for the positive-cone search: strict comparisons and
// equalities between words, "1" standing for the identity.

#include <string>
#include <string_view>
#include <vector>

#include "ordgrp/presentation.hpp"

namespace ordgrp::pres {

enum class Relation { Less, Greater, Equal };

struct SeedFact {
  Word lhs;
  Relation rel = Relation::Greater;
  Word rhs;
  friend bool operator==(const SeedFact&, const SeedFact&) = default;
};

struct SignSeed {
  std::vector<SeedFact> facts;
  friend bool operator==(const SignSeed&, const SignSeed&) = default;
};

/// Comma-separated chains such as "a>1, 1<b<a" or "b=a". Throws ParseError.
SignSeed parse_seed(std::string_view text, const Presentation& p);
std::string format_fact(const SeedFact& f);
std::string format_seed(const SignSeed& s);

/// For a strict fact, the word that must be positive: rhs^-1 lhs for
/// lhs > rhs, lhs^-1 rhs for lhs < rhs. Empty for equalities.
Word positive_word(const SeedFact& f);
/// lhs rhs^-1 for an equality.
Word equality_relator(const SeedFact& f);

/// Relators contributed by the seed's equalities, in fact order.
std::vector<Word> seed_relators(const SignSeed& s);

}  // namespace ordgrp::pres
