#include "ordgrp/seed.hpp"

#include "ordgrp/error.hpp"

namespace ordgrp::pres {

namespace {

std::string_view symbol(Relation r) { return r == Relation::Less ? "<" : r == Relation::Greater ? ">" : "="; }

}  // namespace

SignSeed parse_seed(std::string_view text, const Presentation& p) {
  SignSeed seed;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find_first_of(",;", start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view chain = text.substr(start, end - start);
    start = end + 1;

    std::vector<Word> terms;
    std::vector<Relation> rels;
    std::size_t from = 0;
    for (std::size_t i = 0; i <= chain.size(); ++i) {
      if (i < chain.size() && chain[i] != '<' && chain[i] != '>' && chain[i] != '=') continue;
      terms.push_back(parse_word(chain.substr(from, i - from), p));
      if (i < chain.size())
        rels.push_back(chain[i] == '<' ? Relation::Less : chain[i] == '>' ? Relation::Greater : Relation::Equal);
      from = i + 1;
    }
    if (rels.empty()) {
      if (chain.find_first_not_of(" \t") == std::string_view::npos) continue;
      throw Error(ErrorCode::ParseError, "fact without a comparison: '" + std::string(chain) + "'");
    }
    for (std::size_t i = 0; i < rels.size(); ++i) seed.facts.push_back({terms[i], rels[i], terms[i + 1]});
  }
  return seed;
}

std::string format_fact(const SeedFact& f) {
  return (f.lhs.empty() ? "1" : f.lhs) + std::string(symbol(f.rel)) + (f.rhs.empty() ? "1" : f.rhs);
}

std::string format_seed(const SignSeed& s) {
  std::string out;
  for (const auto& f : s.facts) {
    if (!out.empty()) out += ", ";
    out += format_fact(f);
  }
  return out;
}

Word positive_word(const SeedFact& f) {
  switch (f.rel) {
    case Relation::Greater:
      return concat(inverse(f.rhs), f.lhs);
    case Relation::Less:
      return concat(inverse(f.lhs), f.rhs);
    case Relation::Equal:
      break;
  }
  return {};
}

Word equality_relator(const SeedFact& f) { return concat(f.lhs, inverse(f.rhs)); }

std::vector<Word> seed_relators(const SignSeed& s) {
  std::vector<Word> out;
  for (const auto& f : s.facts)
    if (f.rel == Relation::Equal) out.push_back(equality_relator(f));
  return out;
}

}  // namespace ordgrp::pres
