#pragma once

// Homomorphisms from a presented group to symmetric groups, found by
// exhaustive search up to a degree cap.

#include <optional>
#include <vector>

#include "ordgrp/presentation.hpp"

namespace ordgrp::pres {

/// 0-based images. Words act on the right, left to right: the image of a word
/// sends i to p_k(...p_1(i)).
using Perm = std::vector<int>;

Perm perm_identity(int degree);
/// First p, then q.
Perm perm_then(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
bool is_permutation(const Perm& p, int degree);

/// images[i] is the image of generator i. Assumes valid permutations.
Perm evaluate(const Word& w, const Presentation& p, const std::vector<Perm>& images);
bool satisfies_relators(const Presentation& p, const std::vector<Perm>& images);

enum class SeparationMode { Distinct, NonCommuting };
std::string_view to_string(SeparationMode m);

struct QuotientWitness {
  int degree = 0;
  std::vector<Perm> images;
  Word u, v;
  SeparationMode mode = SeparationMode::Distinct;
};

/// For degree 2..degree_cap: the first generator runs over one
/// representative per cycle type (cycles on consecutive points, partitions in
/// lexicographic order), the others over all permutations in lexicographic
/// order of their image arrays. Returns the first assignment that satisfies
/// every relator and separates u from v.
std::optional<QuotientWitness> finite_quotient_witness(const Presentation& p, const Word& u, const Word& v,
                                                       int degree_cap,
                                                       SeparationMode mode = SeparationMode::Distinct);

/// Re-evaluates the relators and the separation.
bool check_witness(const Presentation& p, const QuotientWitness& w);

/// {"degree", "images": {"a": [1-based ...]}, "targets": [u, v], "mode"}.
json to_json(const QuotientWitness& w, const Presentation& p);
/// Throws MalformedCertificate.
QuotientWitness witness_from_json(const json& j, const Presentation& p);

}  // namespace ordgrp::pres
