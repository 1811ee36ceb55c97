#include "ordgrp/free_magnus.hpp"

#include <cstdlib>
#include <sstream>

#include "ordgrp/error.hpp"

namespace ordgrp::magnus {

namespace {

void check_letters(int rank, const std::vector<int>& letters) {
  if (rank < 1) throw Error(ErrorCode::MalformedWord, "free group rank must be >= 1");
  for (int k : letters) {
    if (k == 0 || std::abs(k) > rank)
      throw Error(ErrorCode::IndexOutOfBand, "letter " + std::to_string(k) + " not in F_" + std::to_string(rank));
  }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::CoefficientOverflow, "Magnus coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::CoefficientOverflow, "Magnus coefficient overflow");
  return out;
}

}  // namespace

FreeWord free_reduce(int rank, std::vector<int> letters) {
  check_letters(rank, letters);
  std::size_t top = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (top > 0 && letters[top - 1] == -letters[i]) {
      --top;
    } else {
      letters[top++] = letters[i];
    }
  }
  letters.resize(top);
  return FreeWord{rank, std::move(letters)};
}

FreeWord parse_free_word(std::string_view text, int rank) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      letters.push_back(k);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::MalformedWord, "not an integer: '" + token + "'");
    }
  }
  return free_reduce(rank, std::move(letters));
}

std::string format_free_word(const FreeWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  if (u.rank != v.rank) throw Error(ErrorCode::DimensionMismatch, "free group ranks differ");
  std::vector<int> letters = u.letters;
  letters.insert(letters.end(), v.letters.begin(), v.letters.end());
  return free_reduce(u.rank, std::move(letters));
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out{w.rank, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return multiply(multiply(u, v), multiply(inverse(u), inverse(v)));
}

MagnusSeries::MagnusSeries(int rank, int cap) : rank_(rank), cap_(cap) {
  if (cap < 1) throw Error(ErrorCode::CapTooSmall, "truncation degree must be >= 1");
}

MagnusSeries MagnusSeries::one(int rank, int cap) {
  MagnusSeries s(rank, cap);
  s.terms_[{}] = 1;
  return s;
}

std::int64_t MagnusSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MagnusSeries::add(const Monomial& m, std::int64_t c) {
  if (c == 0 || static_cast<int>(m.size()) > cap_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MagnusSeries MagnusSeries::times_letter(int i) const {
  MagnusSeries out = *this;
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.size()) >= cap_) continue;
    Monomial longer = m;
    longer.push_back(i);
    out.add(longer, c);
  }
  return out;
}

MagnusSeries MagnusSeries::times_inverse_letter(int i) const {
  // T (1 + X_i) = S gives T_d = S_d - T_{d-1} X_i; degree d-1 of T is final
  // before degree d is touched because the map iterates in graded order.
  MagnusSeries out = *this;
  for (int d = 0; d < cap_; ++d) {
    std::vector<std::pair<Monomial, std::int64_t>> layer;
    for (const auto& [m, c] : out.terms_) {
      if (static_cast<int>(m.size()) == d) layer.emplace_back(m, c);
      if (static_cast<int>(m.size()) > d) break;
    }
    for (auto& [m, c] : layer) {
      m.push_back(i);
      out.add(m, -c);
    }
  }
  return out;
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& other) const {
  if (rank_ != other.rank_ || cap_ != other.cap_)
    throw Error(ErrorCode::DimensionMismatch, "Magnus series with different rank or cap");
  MagnusSeries out(rank_, cap_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      if (static_cast<int>(a.size() + b.size()) > cap_) break;  // graded: later b are no shorter
      Monomial m = a;
      m.insert(m.end(), b.begin(), b.end());
      out.add(m, checked_mul(ca, cb));
    }
  }
  return out;
}

std::optional<std::pair<Monomial, std::int64_t>> MagnusSeries::leading_nonconstant() const {
  for (const auto& [m, c] : terms_)
    if (!m.empty()) return std::make_pair(m, c);
  return std::nullopt;
}

json MagnusSeries::to_json() const {
  json terms = json::array();
  for (const auto& [m, c] : terms_) terms.push_back({{"mono", m}, {"coef", c}});
  return json{{"cap", cap_}, {"terms", terms}};
}

MagnusSeries magnus_expand(const FreeWord& w, int cap) {
  MagnusSeries s = MagnusSeries::one(w.rank, cap);
  for (int k : w.letters) s = k > 0 ? s.times_letter(k) : s.times_inverse_letter(-k);
  return s;
}

namespace {

std::pair<Monomial, std::int64_t> leading_term(const FreeWord& w, const MagnusOptions& options) {
  int cap = std::max(1, options.initial_cap);
  while (true) {
    if (auto lead = magnus_expand(w, cap).leading_nonconstant()) return *lead;
    if (cap >= options.cap_ceiling)
      throw Error(ErrorCode::DegreeCeilingExceeded,
                  "no nonzero term up to degree " + std::to_string(cap) + " for " + format_free_word(w));
    cap = std::min(cap * 2, options.cap_ceiling);
  }
}

}  // namespace

Sign magnus_sign(const FreeWord& w, const MagnusOptions& options) {
  if (w.empty()) return Sign::Zero;
  return leading_term(w, options).second > 0 ? Sign::Positive : Sign::Negative;
}

Ordering magnus_compare(const FreeWord& u, const FreeWord& v, const MagnusOptions& options) {
  return ordering_from_quotient_sign(magnus_sign(multiply(inverse(u), v), options));
}

int lcs_degree(const FreeWord& w, const MagnusOptions& options) {
  if (w.empty()) throw Error(ErrorCode::IdentityWord, "lcs_degree of the identity is undefined");
  return static_cast<int>(leading_term(w, options).first.size());
}

json to_json(const FreeWord& w) { return json{{"rank", w.rank}, {"letters", w.letters}}; }

FreeWord free_word_from_json(const json& j) {
  try {
    return free_reduce(j.at("rank").get<int>(), j.at("letters").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("free word JSON: ") + e.what());
  }
}

SampleSet<FreeWord> sample_free_words(int rank, std::size_t count, std::size_t max_len, std::uint64_t seed) {
  Rng rng(seed);
  SampleSet<FreeWord> out;
  out.seed = seed;
  const auto letters = static_cast<std::uint64_t>(2 * rank);
  for (std::size_t s = 0; s < count; ++s) {
    const auto len = uniform_below(rng, max_len + 1);
    std::vector<int> w;
    for (std::uint64_t i = 0; i < len; ++i) {
      const auto pick = static_cast<int>(uniform_below(rng, letters));
      w.push_back(pick % 2 == 0 ? pick / 2 + 1 : -(pick / 2 + 1));
    }
    out.elements.push_back(free_reduce(rank, std::move(w)));
  }
  return out;
}

}  // namespace ordgrp::magnus
