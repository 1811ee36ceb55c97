#pragma once

// Obstructions to orderability of presented groups: indicability via the
// abelianization, bounded positive-cone contradictions, and the unique-root,
// power-commuting and conjugation-inversion rules for bi-orders.

#include <optional>
#include <string>
#include <vector>

#include "ordgrp/certificate.hpp"
#include "ordgrp/quotient.hpp"
#include "ordgrp/rewriting.hpp"
#include "ordgrp/seed.hpp"
#include "ordgrp/smith.hpp"

namespace ordgrp::pres {

// --- Indicability -------------------------------------------------------------

enum class IndicabilityVerdict { NotIndicable, Indicable, Unknown };
std::string_view to_string(IndicabilityVerdict v);

struct IndicabilityResult {
  IndicabilityVerdict verdict = IndicabilityVerdict::Unknown;
  Abelianization abelianization;
  /// Present when NotIndicable. Its conclusion is "not-bi-orderable" when the
  /// group is known to be nontrivial (torsion, or the supplied witness), and
  /// "not-indicable" otherwise.
  std::optional<Certificate> certificate;
};

/// NotIndicable iff the abelianization has rank 0. Nontrivial torsion is
/// used as the nontriviality proof before the witness.
IndicabilityResult indicability_obstruction(const Presentation& p,
                                            const std::optional<QuotientWitness>& nontriviality = std::nullopt);

/// The first generator g (in order) with g != 1 in some quotient of degree <= cap.
std::optional<QuotientWitness> nontriviality_witness(const Presentation& p, int degree_cap);

// --- Cone search --------------------------------------------------------------

struct ConeBounds {
  /// Products of up to this many positive atoms are tried.
  std::size_t max_factors = 10;
  ProverBounds rewrite{.ball_len = 0, .ball_steps = 0, .probe_slack = 0, .probe_steps = 6, .max_nodes = 4'000};
};

json to_json(const ConeBounds& b);

struct ConeResult {
  std::optional<Certificate> contradiction;
  std::size_t products_checked = 0;
  bool found() const { return contradiction.has_value(); }
};

/// The atoms are the positive words of the seed's strict facts; equalities
/// become extra relators. Products of atoms are tried by number of factors,
/// then lexicographically in atom order; a product proved trivial is a
/// contradiction, since a positive cone never contains 1. Throws
/// InconsistentSeed if the facts contradict each other outright.
ConeResult cone_consistency_search(const Presentation& p, const SignSeed& seed, const ConeBounds& bounds = {});

// --- Case analysis ------------------------------------------------------------

struct CaseSchema {
  std::string name;
  std::vector<SignSeed> cases;
};

/// One generator a: {a>1, a<1, a=1}. Two or more, over the first two a, b:
/// {a=1} and a>1 (the reversed order covers a<1) combined with each of
/// b<1, 1<b<a, b>a>1, b=a, b=1.
CaseSchema default_schema(const Presentation& p);

struct CaseOutcome {
  SignSeed seed;
  std::optional<Certificate> certificate;
};

struct CaseAnalysis {
  std::string schema;
  std::vector<CaseOutcome> cases;
  bool all_refuted() const;
  /// "NotLeftOrderableRelativeToSchema" or "Unknown".
  std::string verdict() const;
};

struct CaseBounds {
  ConeBounds cone;
  int degree_cap = 5;
};

/// A case with equalities is first discharged by a quotient witness that
/// separates the two sides of one of them; otherwise, and for strict cases,
/// by cone_consistency_search.
CaseAnalysis nonlo_case_analysis(const Presentation& p, const CaseSchema& schema, const CaseBounds& bounds = {});

json to_json(const CaseAnalysis& a, const Presentation& p);

// --- Bi-order refutation ------------------------------------------------------

enum class RefuteRule { Indicability, UniqueRoots, PowerCommutes, ConjugationInversion };
std::string_view to_string(RefuteRule r);
/// Throws ParseError.
RefuteRule refute_rule_from_string(std::string_view s);

struct RefuteBounds {
  ProverBounds rewrite{.ball_len = 0, .ball_steps = 0, .probe_slack = 2, .probe_steps = 8, .max_nodes = 4'000};
  int degree_cap = 7;
  /// Unique roots: u, v of length <= roots_len, exponents 2..roots_power.
  std::size_t roots_len = 2;
  int roots_power = 4;
  /// Power commutes: g, h of length <= commute_len, exponents 2..commute_power.
  std::size_t commute_len = 1;
  int commute_power = 4;
  /// Conjugation inversion: x, w of length <= conj_len.
  std::size_t conj_len = 2;
  std::vector<RefuteRule> order{RefuteRule::Indicability, RefuteRule::ConjugationInversion, RefuteRule::PowerCommutes,
                                RefuteRule::UniqueRoots};
};

json to_json(const RefuteBounds& b);

struct RefuteResult {
  std::optional<Certificate> certificate;
  std::optional<RefuteRule> rule;
};

/// Tries the rules in bounds.order; the first certificate found wins.
RefuteResult biorder_refute(const Presentation& p, const RefuteBounds& bounds = {});

std::optional<Certificate> try_unique_roots(const Presentation& p, const RefuteBounds& bounds);
std::optional<Certificate> try_power_commutes(const Presentation& p, const RefuteBounds& bounds);
std::optional<Certificate> try_conjugation_inversion(const Presentation& p, const RefuteBounds& bounds);
std::optional<Certificate> try_indicability(const Presentation& p, const RefuteBounds& bounds);

}  // namespace ordgrp::pres
