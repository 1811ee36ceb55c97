#pragma once

// Free groups F_r and the bi-order induced by the Magnus expansion
// x_i -> 1 + X_i into truncated noncommutative integer power series.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ordgrp/order_core.hpp"

namespace ordgrp::magnus {

/// Letter k > 0 is x_k, k < 0 is x_{|k|}^{-1}; always freely reduced.
struct FreeWord {
  int rank = 1;
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

/// Cancels adjacent k, -k. Letters must lie in 1..rank in absolute value.
FreeWord free_reduce(int rank, std::vector<int> letters);
FreeWord parse_free_word(std::string_view text, int rank);
std::string format_free_word(const FreeWord& w);

FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord inverse(const FreeWord& w);
FreeWord commutator(const FreeWord& u, const FreeWord& v);  // u v u^{-1} v^{-1}

/// Sequence of variable indices 1..rank.
using Monomial = std::vector<int>;

/// Graded order: total degree first, then lexicographic on indices.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Integer power series in noncommuting X_1..X_rank, truncated above total
/// degree cap. Zero coefficients are never stored.
class MagnusSeries {
 public:
  MagnusSeries(int rank, int cap);

  static MagnusSeries one(int rank, int cap);

  int rank() const { return rank_; }
  int cap() const { return cap_; }
  const std::map<Monomial, std::int64_t, MonomialLess>& terms() const { return terms_; }

  std::int64_t coefficient(const Monomial& m) const;
  void add(const Monomial& m, std::int64_t c);

  /// this * (1 + X_i)
  MagnusSeries times_letter(int i) const;
  /// this * (1 + X_i)^{-1} = this * (1 - X_i + X_i^2 - ...)
  MagnusSeries times_inverse_letter(int i) const;
  /// Truncated product.
  MagnusSeries operator*(const MagnusSeries& other) const;

  /// Lowest-order term of (series - 1) in the graded order, if any.
  std::optional<std::pair<Monomial, std::int64_t>> leading_nonconstant() const;

  json to_json() const;
  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

 private:
  int rank_;
  int cap_;
  std::map<Monomial, std::int64_t, MonomialLess> terms_;
};

/// Throws CapTooSmall if cap < 1.
MagnusSeries magnus_expand(const FreeWord& w, int cap);

struct MagnusOptions {
  int initial_cap = 2;
  int cap_ceiling = 64;
};

/// Sign of the first nonzero coefficient of expand(w) - 1; caps double from
/// initial_cap until that term appears. Throws DegreeCeilingExceeded past the
/// ceiling.
Sign magnus_sign(const FreeWord& w, const MagnusOptions& options = {});

/// u < v iff u^{-1} v is positive.
Ordering magnus_compare(const FreeWord& u, const FreeWord& v, const MagnusOptions& options = {});

/// Least total degree of a nonzero term of expand(w) - 1, i.e. the largest c
/// with w in the c-th lower central subgroup. Throws IdentityWord for empty w.
int lcs_degree(const FreeWord& w, const MagnusOptions& options = {});

json to_json(const FreeWord& w);
FreeWord free_word_from_json(const json& j);

class MagnusOracle {
 public:
  using Element = FreeWord;

  explicit MagnusOracle(int rank, MagnusOptions options = {}) : rank_(rank), options_(options) {}

  Ordering compare(const FreeWord& u, const FreeWord& v) const { return magnus_compare(u, v, options_); }
  FreeWord multiply(const FreeWord& u, const FreeWord& v) const { return magnus::multiply(u, v); }
  FreeWord invert(const FreeWord& u) const { return inverse(u); }
  FreeWord identity() const { return FreeWord{rank_, {}}; }
  json to_json(const FreeWord& w) const { return magnus::to_json(w); }

 private:
  int rank_;
  MagnusOptions options_;
};

/// Same generation rule as the braid sampler: length uniform in [0, max_len],
/// letters uniform over the 2r signed generators, then freely reduced.
SampleSet<FreeWord> sample_free_words(int rank, std::size_t count, std::size_t max_len, std::uint64_t seed);

}  // namespace ordgrp::magnus
