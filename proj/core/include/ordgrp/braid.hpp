#pragma once

// Artin braid groups B_n on words in the generators sigma_1..sigma_{n-1}.
// Equality and the Dehornoy order are decided by handle reduction.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordgrp/order_core.hpp"

namespace ordgrp::braid {

/// Letter k > 0 is sigma_k, k < 0 is sigma_{|k|}^{-1}; 1 <= |k| <= strands-1.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses whitespace-separated signed integers. Throws MalformedWord or
/// IndexOutOfBand; BadStrandCount if strands < 2.
BraidWord parse_braid(std::string_view text, int strands);
std::string format_braid(const BraidWord& b);

BraidWord make_braid(int strands, std::vector<int> letters);
BraidWord identity(int strands);
BraidWord generator(int strands, int k);

/// Concatenation followed by free reduction. Throws StrandMismatch.
BraidWord multiply(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& b);
BraidWord power(const BraidWord& b, int k);
/// Cancels adjacent k, -k pairs.
BraidWord free_reduce(BraidWord b);

/// images[i-1] is the end position of the strand starting at position i.
struct Permutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
  /// Cycles of length >= 2 in the usual notation, e.g. "(1 3 2)"; "()" for the identity.
  std::string cycle_notation() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// The word acts left to right on start positions: sigma_i swaps i and i+1.
Permutation permutation(const BraidWord& b);
/// First p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
std::size_t cycle_count(const Permutation& p);

enum class Classification { Trivial, Positive, Negative };
std::string_view to_string(Classification c);

struct ReductionResult {
  BraidWord word;
  Classification classification = Classification::Trivial;
  /// Least generator index occurring in the reduced word; 0 when Trivial.
  int index = 0;
  std::uint64_t steps = 0;
};

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;

/// Handle reduction. A sigma_i-handle is a factor s_i^e v s_i^{-e} whose
/// interior v only uses indices > i. The handle whose right end occurs first
/// is reduced at each step (such a handle never contains a nested handle), by
/// deleting its ends and replacing each s_{i+1}^d in v by
/// s_{i+1}^{-e} s_i^d s_{i+1}^{e}; the word is kept freely reduced.
/// Throws StepCapExceeded after step_cap reductions.
ReductionResult handle_reduce(const BraidWord& b, std::uint64_t step_cap = kDefaultStepCap);

/// Sign of b in the Dehornoy cone.
Sign dehornoy_sign(const BraidWord& b, std::uint64_t step_cap = kDefaultStepCap);

bool braids_equal(const BraidWord& u, const BraidWord& v, std::uint64_t step_cap = kDefaultStepCap);

/// u < v iff u^{-1} v is sigma-positive.
Ordering dehornoy_compare(const BraidWord& u, const BraidWord& v, std::uint64_t step_cap = kDefaultStepCap);

/// Half twist (s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1). Throws BadStrandCount for n < 2.
BraidWord delta(int n);

bool is_pure(const BraidWord& b);
int closure_components(const BraidWord& b);

enum class MnVerdict { PrimeNontrivialKnot, Inconclusive, NotAKnot };
std::string_view to_string(MnVerdict v);

/// If the closure is a knot and b > Delta^4 or b < Delta^-4 in the Dehornoy
/// order, the closure is a nontrivial prime knot. The converse is not
/// claimed, so anything else is Inconclusive.
MnVerdict mn_prime_test(const BraidWord& b, std::uint64_t step_cap = kDefaultStepCap);

/// x <_g y iff g x g^{-1} < g y g^{-1}.
Ordering conjugate_compare(const BraidWord& g, const BraidWord& u, const BraidWord& v,
                           std::uint64_t step_cap = kDefaultStepCap);

json to_json(const BraidWord& b);
BraidWord braid_from_json(const json& j);

/// Dehornoy order on B_n as an OrderOracle.
class DehornoyOracle {
 public:
  using Element = BraidWord;

  explicit DehornoyOracle(int strands, std::uint64_t step_cap = kDefaultStepCap)
      : strands_(strands), step_cap_(step_cap) {}

  Ordering compare(const BraidWord& u, const BraidWord& v) const { return dehornoy_compare(u, v, step_cap_); }
  BraidWord multiply(const BraidWord& u, const BraidWord& v) const { return braid::multiply(u, v); }
  BraidWord invert(const BraidWord& u) const { return inverse(u); }
  BraidWord identity() const { return braid::identity(strands_); }
  json to_json(const BraidWord& b) const { return braid::to_json(b); }

 private:
  int strands_;
  std::uint64_t step_cap_;
};

/// The conjugate order <_g of the Dehornoy order.
class ConjugateDehornoyOracle {
 public:
  using Element = BraidWord;

  explicit ConjugateDehornoyOracle(BraidWord conjugator, std::uint64_t step_cap = kDefaultStepCap)
      : g_(std::move(conjugator)), step_cap_(step_cap) {}

  Ordering compare(const BraidWord& u, const BraidWord& v) const { return conjugate_compare(g_, u, v, step_cap_); }
  BraidWord multiply(const BraidWord& u, const BraidWord& v) const { return braid::multiply(u, v); }
  BraidWord invert(const BraidWord& u) const { return inverse(u); }
  BraidWord identity() const { return braid::identity(g_.strands); }
  json to_json(const BraidWord& b) const { return braid::to_json(b); }

 private:
  BraidWord g_;
  std::uint64_t step_cap_;
};

/// count words; each has length drawn uniformly from [0, max_len], letters
/// uniform over the 2(n-1) signed generators, then freely reduced.
SampleSet<BraidWord> sample_braids(int strands, std::size_t count, std::size_t max_len, std::uint64_t seed);

/// Every freely reduced word of length <= max_len, by length then in the
/// letter order 1, -1, 2, -2, ...
std::vector<BraidWord> enumerate_braid_words(int strands, std::size_t max_len);

}  // namespace ordgrp::braid
