#include "ordgrp/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ordgrp/error.hpp"

namespace ordgrp::braid {

namespace {

void check_strands(int strands) {
  if (strands < 2) throw Error(ErrorCode::BadStrandCount, "need at least 2 strands, got " + std::to_string(strands));
}

void check_same_strands(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands)
    throw Error(ErrorCode::StrandMismatch,
                "B_" + std::to_string(u.strands) + " vs B_" + std::to_string(v.strands));
}

int sgn(int x) { return x > 0 ? 1 : -1; }

// In-place stack reduction of adjacent k, -k.
void cancel_pairs(std::vector<int>& letters) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (top > 0 && letters[top - 1] == -letters[i]) {
      --top;
    } else {
      letters[top++] = letters[i];
    }
  }
  letters.resize(top);
}

struct Handle {
  std::size_t begin;
  std::size_t end;  // inclusive
};

// The handle whose right end is leftmost. Scanning back from a letter of
// index i, the first letter with index <= i decides: same index and opposite
// sign closes a handle.
std::optional<Handle> first_handle(const std::vector<int>& w) {
  for (std::size_t j = 1; j < w.size(); ++j) {
    const int i = std::abs(w[j]);
    for (std::size_t p = j; p-- > 0;) {
      const int k = std::abs(w[p]);
      if (k > i) continue;
      if (k == i && w[p] == -w[j]) return Handle{p, j};
      break;
    }
  }
  return std::nullopt;
}

}  // namespace

BraidWord make_braid(int strands, std::vector<int> letters) {
  check_strands(strands);
  for (int k : letters) {
    if (k == 0) throw Error(ErrorCode::IndexOutOfBand, "letter 0 is not a generator");
    if (std::abs(k) >= strands)
      throw Error(ErrorCode::IndexOutOfBand,
                  "generator " + std::to_string(k) + " not in B_" + std::to_string(strands));
  }
  return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
      throw Error(ErrorCode::MalformedWord, "not an integer: '" + token + "'");
    letters.push_back(value);
  }
  return make_braid(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  for (std::size_t i = 0; i < b.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b.letters[i]);
  }
  return out;
}

BraidWord identity(int strands) { return make_braid(strands, {}); }

BraidWord generator(int strands, int k) { return make_braid(strands, {k}); }

BraidWord free_reduce(BraidWord b) {
  cancel_pairs(b.letters);
  return b;
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  check_same_strands(u, v);
  BraidWord out{u.strands, u.letters};
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  cancel_pairs(out.letters);
  return out;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord out{b.strands, {}};
  out.letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord power(const BraidWord& b, int k) {
  const BraidWord base = k < 0 ? inverse(b) : b;
  BraidWord out = identity(b.strands);
  for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == static_cast<int>(start) + 1) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(images[i] - 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation permutation(const BraidWord& b) {
  // sigma_k swaps whatever strands occupy positions k and k+1.
  const int n = b.strands;
  std::vector<int> at(n);  // at[pos] = starting position of the strand at pos
  for (int i = 0; i < n; ++i) at[i] = i;
  for (int k : b.letters) {
    const int p = std::abs(k) - 1;
    std::swap(at[p], at[p + 1]);
  }
  Permutation out;
  out.images.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) out.images[at[pos]] = pos + 1;
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.images.size() != q.images.size()) throw Error(ErrorCode::StrandMismatch, "permutation degrees differ");
  Permutation out;
  out.images.resize(p.images.size());
  for (std::size_t i = 0; i < p.images.size(); ++i) out.images[i] = q.images[p.images[i] - 1];
  return out;
}

std::size_t cycle_count(const Permutation& p) {
  std::vector<bool> seen(p.images.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < p.images.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(p.images[i] - 1)) seen[i] = true;
  }
  return cycles;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Trivial: return "Trivial";
    case Classification::Positive: return "Positive";
    case Classification::Negative: return "Negative";
  }
  return "?";
}

ReductionResult handle_reduce(const BraidWord& b, std::uint64_t step_cap) {
  if (step_cap == 0) throw std::invalid_argument("handle_reduce: step_cap must be positive");
  ReductionResult result;
  std::vector<int> w = b.letters;
  cancel_pairs(w);
  std::vector<int> next;
  while (auto handle = first_handle(w)) {
    if (result.steps == step_cap)
      throw Error(ErrorCode::StepCapExceeded, "handle reduction exceeded " + std::to_string(step_cap) + " steps");
    ++result.steps;
    const int i = std::abs(w[handle->begin]);
    const int e = sgn(w[handle->begin]);
    next.clear();
    next.reserve(w.size() + 2 * (handle->end - handle->begin));
    next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(handle->begin));
    for (std::size_t p = handle->begin + 1; p < handle->end; ++p) {
      const int x = w[p];
      if (std::abs(x) == i + 1) {
        next.push_back(-(i + 1) * e);
        next.push_back(i * sgn(x));
        next.push_back((i + 1) * e);
      } else {
        next.push_back(x);
      }
    }
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(handle->end) + 1, w.end());
    cancel_pairs(next);
    w.swap(next);
  }

  result.word = BraidWord{b.strands, std::move(w)};
  if (result.word.empty()) {
    result.classification = Classification::Trivial;
  } else {
    int least = b.strands;
    int sign = 0;
    for (int x : result.word.letters) {
      if (std::abs(x) < least) {
        least = std::abs(x);
        sign = sgn(x);
      }
    }
    result.index = least;
    result.classification = sign > 0 ? Classification::Positive : Classification::Negative;
  }
  if (permutation(result.word) != permutation(b))
    throw std::logic_error("handle_reduce changed the permutation of " + format_braid(b));
  return result;
}

Sign dehornoy_sign(const BraidWord& b, std::uint64_t step_cap) {
  switch (handle_reduce(b, step_cap).classification) {
    case Classification::Trivial: return Sign::Zero;
    case Classification::Positive: return Sign::Positive;
    case Classification::Negative: return Sign::Negative;
  }
  return Sign::Zero;
}

bool braids_equal(const BraidWord& u, const BraidWord& v, std::uint64_t step_cap) {
  check_same_strands(u, v);
  if (permutation(u) != permutation(v)) return false;
  return handle_reduce(multiply(u, inverse(v)), step_cap).classification == Classification::Trivial;
}

Ordering dehornoy_compare(const BraidWord& u, const BraidWord& v, std::uint64_t step_cap) {
  check_same_strands(u, v);
  return ordering_from_quotient_sign(dehornoy_sign(multiply(inverse(u), v), step_cap));
}

BraidWord delta(int n) {
  check_strands(n);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int top = n - 1; top >= 1; --top)
    for (int k = 1; k <= top; ++k) letters.push_back(k);
  return BraidWord{n, std::move(letters)};
}

bool is_pure(const BraidWord& b) { return permutation(b).is_identity(); }

int closure_components(const BraidWord& b) { return static_cast<int>(cycle_count(permutation(b))); }

std::string_view to_string(MnVerdict v) {
  switch (v) {
    case MnVerdict::PrimeNontrivialKnot: return "PrimeNontrivialKnot";
    case MnVerdict::Inconclusive: return "Inconclusive";
    case MnVerdict::NotAKnot: return "NotAKnot";
  }
  return "?";
}

MnVerdict mn_prime_test(const BraidWord& b, std::uint64_t step_cap) {
  if (closure_components(b) != 1) return MnVerdict::NotAKnot;
  const BraidWord d4 = power(delta(b.strands), 4);
  if (dehornoy_compare(d4, b, step_cap) == Ordering::Less) return MnVerdict::PrimeNontrivialKnot;
  if (dehornoy_compare(b, inverse(d4), step_cap) == Ordering::Less) return MnVerdict::PrimeNontrivialKnot;
  return MnVerdict::Inconclusive;
}

Ordering conjugate_compare(const BraidWord& g, const BraidWord& u, const BraidWord& v, std::uint64_t step_cap) {
  check_same_strands(g, u);
  check_same_strands(g, v);
  const BraidWord gi = inverse(g);
  return dehornoy_compare(multiply(multiply(g, u), gi), multiply(multiply(g, v), gi), step_cap);
}

json to_json(const BraidWord& b) { return json{{"strands", b.strands}, {"letters", b.letters}}; }

BraidWord braid_from_json(const json& j) {
  try {
    return make_braid(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("braid JSON: ") + e.what());
  }
}

SampleSet<BraidWord> sample_braids(int strands, std::size_t count, std::size_t max_len, std::uint64_t seed) {
  check_strands(strands);
  Rng rng(seed);
  SampleSet<BraidWord> out;
  out.seed = seed;
  out.elements.reserve(count);
  const auto letters = static_cast<std::uint64_t>(2 * (strands - 1));
  for (std::size_t s = 0; s < count; ++s) {
    const auto len = uniform_below(rng, max_len + 1);
    std::vector<int> w;
    w.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) {
      const auto pick = static_cast<int>(uniform_below(rng, letters));
      w.push_back(pick % 2 == 0 ? pick / 2 + 1 : -(pick / 2 + 1));
    }
    cancel_pairs(w);
    out.elements.push_back(BraidWord{strands, std::move(w)});
  }
  return out;
}

std::vector<BraidWord> enumerate_braid_words(int strands, std::size_t max_len) {
  check_strands(strands);
  std::vector<int> alphabet;
  for (int k = 1; k < strands; ++k) {
    alphabet.push_back(k);
    alphabet.push_back(-k);
  }
  std::vector<BraidWord> out{identity(strands)};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
      for (int x : alphabet) {
        const auto& base = out[idx].letters;
        if (!base.empty() && base.back() == -x) continue;
        BraidWord w{strands, base};
        w.letters.push_back(x);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace ordgrp::braid
