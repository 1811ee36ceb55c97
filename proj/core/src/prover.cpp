#include "ordgrp/prover.hpp"

#include <map>
#include <set>

#include "ordgrp/error.hpp"

namespace ordgrp::pres {

namespace {

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

json smith_json(const SmithForm& s) {
  return json{{"D", matrix_json(s.D)},
              {"U", matrix_json(s.U)},
              {"V", matrix_json(s.V)},
              {"Uinv", matrix_json(s.Uinv)},
              {"Vinv", matrix_json(s.Vinv)}};
}

SmithForm smith_of(const Presentation& p) {
  const IntMatrix a = exponent_matrix(p);
  if (!a.empty()) return smith_normal_form(a);
  SmithForm s;
  s.cols = p.generators.size();
  s.V = s.Vinv = identity_matrix(s.cols);
  return s;
}

void check_seed(const SignSeed& seed) {
  std::vector<Word> positives;
  for (const auto& f : seed.facts) {
    if (f.rel == Relation::Equal) continue;
    Word w = positive_word(f);
    if (w.empty()) throw Error(ErrorCode::InconsistentSeed, "'" + format_fact(f) + "' compares a word with itself");
    for (const auto& q : positives)
      if (q == inverse(w)) throw Error(ErrorCode::InconsistentSeed, "facts assert both w > 1 and w < 1 for w = " + w);
    positives.push_back(std::move(w));
  }
  for (const auto& e : seed.facts) {
    if (e.rel != Relation::Equal) continue;
    for (const auto& f : seed.facts) {
      if (f.rel == Relation::Equal) continue;
      const Word eq = equality_relator(e);
      const Word st = concat(f.lhs, inverse(f.rhs));
      if (eq == st || eq == inverse(st))
        throw Error(ErrorCode::InconsistentSeed, "'" + format_fact(e) + "' contradicts '" + format_fact(f) + "'");
    }
  }
}

json seed_strings(const SignSeed& seed) {
  json out = json::array();
  for (const auto& f : seed.facts) out.push_back(format_fact(f));
  return out;
}

Certificate equivalence_certificate(CertificateKind kind, json payload, const Word& word, const Chain& chain) {
  payload["word"] = word;
  payload["chain"] = chain_to_json(chain);
  return Certificate{kind, std::move(payload)};
}

}  // namespace

// --- Indicability -------------------------------------------------------------

std::string_view to_string(IndicabilityVerdict v) {
  switch (v) {
    case IndicabilityVerdict::NotIndicable:
      return "NotIndicable";
    case IndicabilityVerdict::Indicable:
      return "Indicable";
    case IndicabilityVerdict::Unknown:
      break;
  }
  return "Unknown";
}

IndicabilityResult indicability_obstruction(const Presentation& p, const std::optional<QuotientWitness>& nontriviality) {
  IndicabilityResult out;
  const SmithForm s = smith_of(p);
  out.abelianization = abelianization_from_smith(s);
  if (out.abelianization.rank > 0) {
    out.verdict = IndicabilityVerdict::Indicable;
    return out;
  }
  out.verdict = IndicabilityVerdict::NotIndicable;
  json payload{{"matrix", matrix_json(exponent_matrix(p))}, {"smith", smith_json(s)}};
  if (!out.abelianization.torsion.empty()) {
    payload["nontrivial"] = json{{"torsion", out.abelianization.torsion}};
    payload["conclusion"] = "not-bi-orderable";
  } else if (nontriviality && check_witness(p, *nontriviality)) {
    payload["nontrivial"] = json{{"quotient", to_json(*nontriviality, p)}};
    payload["conclusion"] = "not-bi-orderable";
  } else {
    payload["nontrivial"] = nullptr;
    payload["conclusion"] = "not-indicable";
  }
  out.certificate = Certificate{CertificateKind::Indicability, std::move(payload)};
  return out;
}

std::optional<QuotientWitness> nontriviality_witness(const Presentation& p, int degree_cap) {
  for (char g : p.generators)
    if (auto w = finite_quotient_witness(p, Word(1, g), Word{}, degree_cap)) return w;
  return std::nullopt;
}

// --- Cone search --------------------------------------------------------------

json to_json(const ConeBounds& b) { return json{{"max_factors", b.max_factors}, {"rewrite", to_json(b.rewrite)}}; }

ConeResult cone_consistency_search(const Presentation& p, const SignSeed& seed, const ConeBounds& bounds) {
  check_seed(seed);
  const std::vector<Word> extra = seed_relators(seed);
  const Presentation q = with_relators(p, extra);
  const TrivialityProver prover(q, bounds.rewrite);

  std::vector<std::pair<std::size_t, Word>> atoms;  // (fact index, positive word)
  for (std::size_t i = 0; i < seed.facts.size(); ++i)
    if (seed.facts[i].rel != Relation::Equal) atoms.emplace_back(i, positive_word(seed.facts[i]));

  ConeResult out;
  if (atoms.empty()) return out;
  std::set<Word> tried;
  for (std::size_t count = 1; count <= bounds.max_factors; ++count) {
    std::vector<std::size_t> tuple(count, 0);
    while (true) {
      Word product;
      for (std::size_t t : tuple) product = concat(product, atoms[t].second);
      if (tried.insert(product).second) {
        ++out.products_checked;
        if (auto chain = prover.prove_trivial(product)) {
          json trace = json::array();
          std::map<std::size_t, std::size_t> entry_of;  // atom -> trace index
          for (std::size_t t : tuple) {
            if (entry_of.count(t)) continue;
            entry_of[t] = trace.size();
            trace.push_back({{"op", "seed"}, {"fact", atoms[t].first}, {"word", atoms[t].second}});
          }
          std::size_t current = entry_of[tuple[0]];
          Word word = atoms[tuple[0]].second;
          for (std::size_t k = 1; k < tuple.size(); ++k) {
            word = concat(word, atoms[tuple[k]].second);
            trace.push_back({{"op", "product"}, {"of", {current, entry_of[tuple[k]]}}, {"word", word}});
            current = trace.size() - 1;
          }
          for (const auto& step : *chain) {
            trace.push_back({{"op", "rewrite"},
                             {"from", current},
                             {"move", to_json(step.move)},
                             {"backward", step.backward},
                             {"word", step.word}});
            current = trace.size() - 1;
          }
          out.contradiction = Certificate{CertificateKind::ConeContradiction,
                                          json{{"seed", seed_strings(seed)}, {"relators", extra}, {"trace", trace}}};
          return out;
        }
      }
      std::size_t k = count;
      while (k-- > 0) {
        if (++tuple[k] < atoms.size()) break;
        tuple[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

// --- Case analysis ------------------------------------------------------------

CaseSchema default_schema(const Presentation& p) {
  CaseSchema s;
  if (p.generators.empty()) return s;
  const std::string a(1, p.generators[0]);
  if (p.generators.size() == 1) {
    s.name = "one-generator {" + a + ">1, " + a + "<1, " + a + "=1}";
    for (const auto& c : {a + ">1", a + "<1", a + "=1"}) s.cases.push_back(parse_seed(c, p));
    return s;
  }
  const std::string b(1, p.generators[1]);
  s.name = "two-generator {" + a + "=1} + {" + a + ">1} x {" + b + "<1, 1<" + b + "<" + a + ", " + b + ">" + a + ">1, " +
           b + "=" + a + ", " + b + "=1}";
  for (const auto& c : {a + "=1", a + ">1, " + b + "<1", a + ">1, 1<" + b + "<" + a, b + ">" + a + ">1",
                        a + ">1, " + b + "=" + a, a + ">1, " + b + "=1"})
    s.cases.push_back(parse_seed(c, p));
  return s;
}

bool CaseAnalysis::all_refuted() const {
  for (const auto& c : cases)
    if (!c.certificate) return false;
  return !cases.empty();
}

std::string CaseAnalysis::verdict() const { return all_refuted() ? "NotLeftOrderableRelativeToSchema" : "Unknown"; }

CaseAnalysis nonlo_case_analysis(const Presentation& p, const CaseSchema& schema, const CaseBounds& bounds) {
  CaseAnalysis out;
  out.schema = schema.name;
  for (const auto& seed : schema.cases) {
    CaseOutcome outcome{seed, std::nullopt};
    for (const auto& f : seed.facts) {
      if (f.rel != Relation::Equal) continue;
      if (auto w = finite_quotient_witness(p, f.lhs, f.rhs, bounds.degree_cap)) {
        outcome.certificate = Certificate{CertificateKind::QuotientWitness, to_json(*w, p)};
        break;
      }
    }
    if (!outcome.certificate) outcome.certificate = cone_consistency_search(p, seed, bounds.cone).contradiction;
    out.cases.push_back(std::move(outcome));
  }
  return out;
}

json to_json(const CaseAnalysis& a, const Presentation&) {
  json cases = json::array();
  for (const auto& c : a.cases) {
    json entry{{"case", format_seed(c.seed)}};
    entry["certificate"] = c.certificate ? to_json(*c.certificate) : json(nullptr);
    cases.push_back(entry);
  }
  return json{{"result", a.verdict()}, {"schema", a.schema}, {"cases", cases}};
}

// --- Bi-order refutation ------------------------------------------------------

std::string_view to_string(RefuteRule r) {
  switch (r) {
    case RefuteRule::Indicability:
      return "Indicability";
    case RefuteRule::UniqueRoots:
      return "UniqueRoots";
    case RefuteRule::PowerCommutes:
      return "PowerCommutes";
    case RefuteRule::ConjugationInversion:
      return "ConjugationInversion";
  }
  return "?";
}

RefuteRule refute_rule_from_string(std::string_view s) {
  for (auto r : {RefuteRule::Indicability, RefuteRule::UniqueRoots, RefuteRule::PowerCommutes,
                 RefuteRule::ConjugationInversion})
    if (to_string(r) == s) return r;
  throw Error(ErrorCode::ParseError, "unknown rule '" + std::string(s) + "'");
}

json to_json(const RefuteBounds& b) {
  json order = json::array();
  for (auto r : b.order) order.push_back(to_string(r));
  return json{{"rewrite", to_json(b.rewrite)},     {"degree_cap", b.degree_cap},
              {"roots_len", b.roots_len},          {"roots_power", b.roots_power},
              {"commute_len", b.commute_len},      {"commute_power", b.commute_power},
              {"conj_len", b.conj_len},            {"order", order}};
}

std::optional<Certificate> try_indicability(const Presentation& p, const RefuteBounds& bounds) {
  const Abelianization ab = abelianization(p);
  if (ab.rank > 0) return std::nullopt;
  std::optional<QuotientWitness> witness;
  if (ab.torsion.empty()) {
    witness = nontriviality_witness(p, bounds.degree_cap);
    if (!witness) return std::nullopt;
  }
  return indicability_obstruction(p, witness).certificate;
}

std::optional<Certificate> try_conjugation_inversion(const Presentation& p, const RefuteBounds& bounds) {
  const TrivialityProver prover(p, bounds.rewrite);
  const auto words = enumerate_words(p, bounds.conj_len);
  for (const auto& x : words) {
    for (const auto& w : words) {
      const Word word = concat(conjugate(x, w), x);
      if (word.empty()) continue;
      const auto chain = prover.prove_trivial(word);
      if (!chain) continue;
      const auto witness = finite_quotient_witness(p, x, Word{}, bounds.degree_cap);
      if (!witness) continue;
      return equivalence_certificate(CertificateKind::ConjugationInversion,
                                     json{{"x", x}, {"w", w}, {"nontrivial", to_json(*witness, p)}}, word, *chain);
    }
  }
  return std::nullopt;
}

std::optional<Certificate> try_power_commutes(const Presentation& p, const RefuteBounds& bounds) {
  const TrivialityProver prover(p, bounds.rewrite);
  const auto words = enumerate_words(p, bounds.commute_len);
  for (const auto& g : words) {
    for (const auto& h : words) {
      if (commutator(g, h).empty()) continue;
      for (int n = 2; n <= bounds.commute_power; ++n) {
        const Word word = commutator(g, power(h, n));
        const auto chain = prover.prove_trivial(word);
        if (!chain) continue;
        const auto witness = finite_quotient_witness(p, g, h, bounds.degree_cap, SeparationMode::NonCommuting);
        if (!witness) break;  // the witness does not depend on n
        return equivalence_certificate(CertificateKind::PowerCommutes,
                                       json{{"g", g}, {"h", h}, {"n", n}, {"noncommuting", to_json(*witness, p)}}, word,
                                       *chain);
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> try_unique_roots(const Presentation& p, const RefuteBounds& bounds) {
  const TrivialityProver prover(p, bounds.rewrite);
  const auto words = enumerate_words(p, bounds.roots_len);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u == v) continue;
      for (int k = 2; k <= bounds.roots_power; ++k) {
        const Word word = concat(power(u, k), inverse(power(v, k)));
        const auto chain = prover.prove_trivial(word);
        if (!chain) continue;
        const auto witness = finite_quotient_witness(p, u, v, bounds.degree_cap);
        if (!witness) break;
        return equivalence_certificate(CertificateKind::UniqueRoots,
                                       json{{"u", u}, {"v", v}, {"k", k}, {"distinct", to_json(*witness, p)}}, word,
                                       *chain);
      }
    }
  }
  return std::nullopt;
}

RefuteResult biorder_refute(const Presentation& p, const RefuteBounds& bounds) {
  for (auto rule : bounds.order) {
    std::optional<Certificate> c;
    switch (rule) {
      case RefuteRule::Indicability:
        c = try_indicability(p, bounds);
        break;
      case RefuteRule::UniqueRoots:
        c = try_unique_roots(p, bounds);
        break;
      case RefuteRule::PowerCommutes:
        c = try_power_commutes(p, bounds);
        break;
      case RefuteRule::ConjugationInversion:
        c = try_conjugation_inversion(p, bounds);
        break;
    }
    if (c) return RefuteResult{std::move(c), rule};
  }
  return {};
}

}  // namespace ordgrp::pres
