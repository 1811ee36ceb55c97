#include "ordgrp/certificate.hpp"

#include <array>

#include "ordgrp/error.hpp"
#include "ordgrp/quotient.hpp"
#include "ordgrp/rewriting.hpp"
#include "ordgrp/seed.hpp"
#include "ordgrp/smith.hpp"

namespace ordgrp::pres {

namespace {

constexpr std::array<std::pair<CertificateKind, std::string_view>, 6> kKindNames{{
    {CertificateKind::UniqueRoots, "UniqueRoots"},
    {CertificateKind::PowerCommutes, "PowerCommutes"},
    {CertificateKind::ConjugationInversion, "ConjugationInversion"},
    {CertificateKind::ConeContradiction, "ConeContradiction"},
    {CertificateKind::Indicability, "Indicability"},
    {CertificateKind::QuotientWitness, "QuotientWitness"},
}};

bool words_in_alphabet(const Presentation& p, std::initializer_list<const Word*> words) {
  for (const Word* w : words)
    for (char c : *w)
      if (!p.has_letter(c)) return false;
  return true;
}

bool verify_chain_to_one(const Presentation& p, const Word& word, const json& chain) {
  const Chain c = chain_from_json(chain);
  if (!check_chain(p, word, c)) return false;
  const Word& last = c.empty() ? word : c.back().word;
  return last.empty();
}

bool verify_witness_targets(const Presentation& p, const json& j, const Word& u, const Word& v, SeparationMode mode) {
  const QuotientWitness w = witness_from_json(j, p);
  if (w.mode != mode || free_reduce(w.u) != free_reduce(u) || free_reduce(w.v) != free_reduce(v)) return false;
  return check_witness(p, w);
}

bool verify_unique_roots(const Presentation& p, const json& j) {
  const Word u = j.at("u").get<std::string>();
  const Word v = j.at("v").get<std::string>();
  const int k = j.at("k").get<int>();
  const Word word = j.at("word").get<std::string>();
  if (k < 1 || !words_in_alphabet(p, {&u, &v, &word})) return false;
  if (word != concat(power(u, k), inverse(power(v, k)))) return false;
  return verify_chain_to_one(p, word, j.at("chain")) &&
         verify_witness_targets(p, j.at("distinct"), u, v, SeparationMode::Distinct);
}

bool verify_power_commutes(const Presentation& p, const json& j) {
  const Word g = j.at("g").get<std::string>();
  const Word h = j.at("h").get<std::string>();
  const int n = j.at("n").get<int>();
  const Word word = j.at("word").get<std::string>();
  if (n < 1 || !words_in_alphabet(p, {&g, &h, &word})) return false;
  if (word != commutator(g, power(h, n))) return false;
  return verify_chain_to_one(p, word, j.at("chain")) &&
         verify_witness_targets(p, j.at("noncommuting"), g, h, SeparationMode::NonCommuting);
}

bool verify_conjugation_inversion(const Presentation& p, const json& j) {
  const Word x = j.at("x").get<std::string>();
  const Word w = j.at("w").get<std::string>();
  const Word word = j.at("word").get<std::string>();
  if (!words_in_alphabet(p, {&x, &w, &word})) return false;
  if (word != concat(conjugate(x, w), x)) return false;
  return verify_chain_to_one(p, word, j.at("chain")) &&
         verify_witness_targets(p, j.at("nontrivial"), x, Word{}, SeparationMode::Distinct);
}

IntMatrix matrix_from_json(const json& j) {
  IntMatrix m;
  for (const auto& row : j) m.push_back(row.get<std::vector<std::int64_t>>());
  return m;
}

bool verify_indicability(const Presentation& p, const json& j) {
  const IntMatrix a = matrix_from_json(j.at("matrix"));
  if (a != exponent_matrix(p)) return false;
  const auto& s = j.at("smith");
  SmithForm f;
  f.rows = a.size();
  f.cols = p.generators.size();
  f.D = matrix_from_json(s.at("D"));
  f.U = matrix_from_json(s.at("U"));
  f.V = matrix_from_json(s.at("V"));
  f.Uinv = matrix_from_json(s.at("Uinv"));
  f.Vinv = matrix_from_json(s.at("Vinv"));
  if (!check_smith(a, f)) return false;
  if (f.rank() != f.cols) return false;  // free rank of the abelianization is 0

  const auto conclusion = j.at("conclusion").get<std::string>();
  const auto& nt = j.at("nontrivial");
  if (conclusion == "not-indicable") return nt.is_null();
  if (conclusion != "not-bi-orderable" || nt.is_null()) return false;
  if (nt.contains("torsion")) {
    const auto claimed = nt.at("torsion").get<std::vector<std::int64_t>>();
    return !claimed.empty() && claimed == abelianization_from_smith(f).torsion;
  }
  const QuotientWitness w = witness_from_json(nt.at("quotient"), p);
  return w.mode == SeparationMode::Distinct && check_witness(p, w);
}

bool verify_cone(const Presentation& p, const json& j) {
  SignSeed seed;
  for (const auto& f : j.at("seed")) {
    const SignSeed one = parse_seed(f.get<std::string>(), p);
    seed.facts.insert(seed.facts.end(), one.facts.begin(), one.facts.end());
  }
  const auto relators = j.at("relators").get<std::vector<std::string>>();
  if (relators != seed_relators(seed)) return false;
  const Presentation q = with_relators(p, relators);

  const auto& trace = j.at("trace");
  if (!trace.is_array() || trace.empty()) return false;
  std::vector<Word> words;
  for (const auto& e : trace) {
    const auto op = e.at("op").get<std::string>();
    const Word word = e.at("word").get<std::string>();
    if (op == "seed") {
      const auto i = e.at("fact").get<std::size_t>();
      if (i >= seed.facts.size() || seed.facts[i].rel == Relation::Equal) return false;
      if (positive_word(seed.facts[i]) != word) return false;
    } else if (op == "product") {
      const auto of = e.at("of").get<std::vector<std::size_t>>();
      if (of.size() != 2 || of[0] >= words.size() || of[1] >= words.size()) return false;
      if (concat(words[of[0]], words[of[1]]) != word) return false;
    } else if (op == "rewrite") {
      const auto from = e.at("from").get<std::size_t>();
      if (from >= words.size()) return false;
      const ChainStep step{move_from_json(e.at("move")), e.at("backward").get<bool>(), word};
      if (!check_chain(q, words[from], Chain{step})) return false;
    } else {
      throw Error(ErrorCode::MalformedCertificate, "unknown trace op '" + op + "'");
    }
    words.push_back(word);
  }
  return words.back().empty();
}

}  // namespace

std::string_view to_string(CertificateKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

CertificateKind certificate_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  throw Error(ErrorCode::MalformedCertificate, "unknown certificate kind '" + std::string(s) + "'");
}

json to_json(const Certificate& c) {
  return json{{"format_version", kCertificateFormatVersion}, {"kind", to_string(c.kind)}, {"payload", c.payload}};
}

Certificate certificate_from_json(const json& j) {
  try {
    if (j.at("format_version").get<int>() != kCertificateFormatVersion)
      throw Error(ErrorCode::MalformedCertificate, "unsupported format_version");
    return Certificate{certificate_kind_from_string(j.at("kind").get<std::string>()), j.at("payload")};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedCertificate, std::string("certificate: ") + e.what());
  }
}

bool verify_certificate(const Certificate& c, const Presentation& p) {
  try {
    switch (c.kind) {
      case CertificateKind::UniqueRoots:
        return verify_unique_roots(p, c.payload);
      case CertificateKind::PowerCommutes:
        return verify_power_commutes(p, c.payload);
      case CertificateKind::ConjugationInversion:
        return verify_conjugation_inversion(p, c.payload);
      case CertificateKind::ConeContradiction:
        return verify_cone(p, c.payload);
      case CertificateKind::Indicability:
        return verify_indicability(p, c.payload);
      case CertificateKind::QuotientWitness:
        return check_witness(p, witness_from_json(c.payload, p));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedCertificate, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) return false;  // a word or fact outside the alphabet
    throw;
  }
  return false;
}

}  // namespace ordgrp::pres
