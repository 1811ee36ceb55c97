#pragma once

// Checkable evidence emitted by the prover. Every certificate is verified by
// replay against a presentation, with no search.

#include <string_view>

#include "ordgrp/presentation.hpp"

namespace ordgrp::pres {

inline constexpr int kCertificateFormatVersion = 1;

enum class CertificateKind {
  UniqueRoots,
  PowerCommutes,
  ConjugationInversion,
  ConeContradiction,
  Indicability,
  QuotientWitness,
};

std::string_view to_string(CertificateKind k);
/// Throws MalformedCertificate.
CertificateKind certificate_kind_from_string(std::string_view s);

/// Payloads by kind:
///   UniqueRoots           u, v, k, word = u^k v^-k, chain (word -> 1), distinct (quotient witness u != v)
///   PowerCommutes         g, h, n, word = [g, h^n], chain, noncommuting (quotient witness)
///   ConjugationInversion  x, w, word = w^-1 x w x, chain, nontrivial (quotient witness x != 1)
///   ConeContradiction     seed (fact strings), relators (added by equalities), trace
///   Indicability          matrix, smith {D, U, V, Uinv, Vinv}, nontrivial ({torsion} or {quotient})
///   QuotientWitness       the witness itself
struct Certificate {
  CertificateKind kind = CertificateKind::QuotientWitness;
  json payload;
};

/// {"format_version": 1, "kind": ..., "payload": ...}
json to_json(const Certificate& c);
/// Throws MalformedCertificate.
Certificate certificate_from_json(const json& j);

/// Replays the certificate against p. False if any check fails; throws
/// MalformedCertificate if the payload is structurally unusable.
bool verify_certificate(const Certificate& c, const Presentation& p);

}  // namespace ordgrp::pres
