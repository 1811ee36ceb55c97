#pragma once

// Comparison-oracle view of left- and bi-orders, plus the property harness
// that every concrete order in the library is run through.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ordgrp {

using json = nlohmann::json;

enum class Ordering { Less, Equal, Greater };
enum class Sign { Negative, Zero, Positive };

std::string_view to_string(Ordering o);
std::string_view to_string(Sign s);

constexpr Ordering flip(Ordering o) {
  return o == Ordering::Less ? Ordering::Greater
         : o == Ordering::Greater ? Ordering::Less
                                  : Ordering::Equal;
}

constexpr Sign negate(Sign s) {
  return s == Sign::Positive ? Sign::Negative : s == Sign::Negative ? Sign::Positive : Sign::Zero;
}

/// u < v iff u^{-1}v is positive; maps the sign of u^{-1}v to the comparison of (u, v).
constexpr Ordering ordering_from_quotient_sign(Sign s) {
  return s == Sign::Positive ? Ordering::Less : s == Sign::Negative ? Ordering::Greater : Ordering::Equal;
}

/// A strict total order on a group, exposed through its comparison.
/// compare must decide Equal exactly (group-element equality).
template <class O>
concept OrderOracle = requires(const O& o, const typename O::Element& a, const typename O::Element& b) {
  typename O::Element;
  { o.compare(a, b) } -> std::same_as<Ordering>;
  { o.multiply(a, b) } -> std::convertible_to<typename O::Element>;
  { o.invert(a) } -> std::convertible_to<typename O::Element>;
  { o.identity() } -> std::convertible_to<typename O::Element>;
  { o.to_json(a) } -> std::convertible_to<json>;
};

template <class E>
struct SampleSet {
  std::vector<E> elements;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Reproducible sampling. mt19937_64's output sequence is fixed by the standard;
// the distributions in <random> are not, so bounded draws go through these.

using Rng = std::mt19937_64;

/// Uniform integer in [0, n), n > 0, by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Uniform integer in [lo, hi].
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

// ---------------------------------------------------------------------------

struct Violation {
  std::string kind;
  json witness;
};

struct Report {
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(std::string_view kind) const;
  void merge(const Report& other);
  json to_json() const;
};

struct HarnessLimits {
  /// Up to this many triples the harness checks every ordered triple of the
  /// sample; beyond it, the cyclic windows (s[i], s[i+1], s[i+2]).
  std::size_t exhaustive_triples = 600'000;
  /// Same for pairs in conradian_check.
  std::size_t exhaustive_pairs = 250'000;
};

namespace detail {

template <class F>
void for_each_triple(std::size_t n, const HarnessLimits& limits, F&& f) {
  if (n == 0) return;
  if (n * n * n <= limits.exhaustive_triples) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) f(i, j, k);
  } else {
    for (std::size_t i = 0; i < n; ++i) f(i, (i + 1) % n, (i + 2) % n);
  }
}

template <class F>
void for_each_pair(std::size_t n, const HarnessLimits& limits, F&& f) {
  if (n == 0) return;
  if (n * n <= limits.exhaustive_pairs) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f(i, j);
  } else {
    for (std::size_t i = 0; i < n; ++i) f(i, (i + 1) % n);
  }
}

}  // namespace detail

/// Strict-total-order laws on the sample: irreflexivity (compare(a,a) is
/// Equal), antisymmetry, transitivity, agreement of Equal with u^{-1}v = 1,
/// cone trichotomy and closure of the positive cone under products.
template <OrderOracle O>
Report verify_order_laws(const O& oracle, std::span<const typename O::Element> samples,
                         const HarnessLimits& limits = {}) {
  Report report;
  const auto one = oracle.identity();
  for (const auto& a : samples) {
    ++report.checked;
    if (oracle.compare(a, a) != Ordering::Equal)
      report.violations.push_back({"reflexive", json::array({oracle.to_json(a)})});
    const Ordering to_one = oracle.compare(one, a);
    const Ordering back = oracle.compare(a, one);
    if (back != flip(to_one))
      report.violations.push_back({"trichotomy", json::array({oracle.to_json(a)})});
  }
  detail::for_each_pair(samples.size(), limits, [&](std::size_t i, std::size_t j) {
    const auto& a = samples[i];
    const auto& b = samples[j];
    ++report.checked;
    const Ordering ab = oracle.compare(a, b);
    if (oracle.compare(b, a) != flip(ab))
      report.violations.push_back({"antisymmetry", json::array({oracle.to_json(a), oracle.to_json(b)})});
    const bool quotient_trivial = oracle.compare(oracle.multiply(oracle.invert(a), b), one) == Ordering::Equal;
    if ((ab == Ordering::Equal) != quotient_trivial)
      report.violations.push_back({"equality", json::array({oracle.to_json(a), oracle.to_json(b)})});
    if (oracle.compare(one, a) == Ordering::Less && oracle.compare(one, b) == Ordering::Less &&
        oracle.compare(one, oracle.multiply(a, b)) != Ordering::Less)
      report.violations.push_back({"cone-closure", json::array({oracle.to_json(a), oracle.to_json(b)})});
  });
  detail::for_each_triple(samples.size(), limits, [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto& a = samples[i];
    const auto& b = samples[j];
    const auto& c = samples[k];
    ++report.checked;
    const Ordering ab = oracle.compare(a, b);
    const Ordering bc = oracle.compare(b, c);
    if (ab == bc) {
      if (oracle.compare(a, c) != ab)
        report.violations.push_back(
            {"transitivity", json::array({oracle.to_json(a), oracle.to_json(b), oracle.to_json(c)})});
    }
  });
  return report;
}

namespace detail {

template <OrderOracle O>
Report verify_invariance(const O& oracle, std::span<const typename O::Element> samples, bool right,
                         const HarnessLimits& limits) {
  Report report;
  for_each_triple(samples.size(), limits, [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto& f = samples[i];
    const auto& g = samples[j];
    const auto& h = samples[k];
    ++report.checked;
    const Ordering base = oracle.compare(g, h);
    const auto witness = [&] { return json::array({oracle.to_json(g), oracle.to_json(h), oracle.to_json(f)}); };
    if (oracle.compare(oracle.multiply(f, g), oracle.multiply(f, h)) != base)
      report.violations.push_back({"left", witness()});
    if (right && oracle.compare(oracle.multiply(g, f), oracle.multiply(h, f)) != base)
      report.violations.push_back({"right", witness()});
  });
  return report;
}

}  // namespace detail

/// Checks g<h => fg<fh over triples (f,g,h) of the sample. Each violation's
/// witness is [g, h, f].
template <OrderOracle O>
Report verify_left_invariance(const O& oracle, std::span<const typename O::Element> samples,
                              const HarnessLimits& limits = {}) {
  return detail::verify_invariance(oracle, samples, false, limits);
}

/// As verify_left_invariance, additionally checking gf<hf; right-side
/// failures are reported with kind "right" and witness [g, h, f].
template <OrderOracle O>
Report verify_bi_invariance(const O& oracle, std::span<const typename O::Element> samples,
                            const HarnessLimits& limits = {}) {
  return detail::verify_invariance(oracle, samples, true, limits);
}

template <class E>
struct ConradianResult {
  std::size_t checked = 0;
  /// (g, h) with g, h > 1 and g >= h g^2, if any was found.
  std::optional<std::pair<E, E>> counterexample;

  bool pass() const { return !counterexample.has_value(); }
};

/// Tests g < h g^2 for positive pairs drawn from the sample, returning the
/// first failing pair in sample order.
template <OrderOracle O>
ConradianResult<typename O::Element> conradian_check(const O& oracle,
                                                     std::span<const typename O::Element> samples,
                                                     const HarnessLimits& limits = {}) {
  using E = typename O::Element;
  const auto one = oracle.identity();
  std::vector<E> positives;
  for (const auto& g : samples)
    if (oracle.compare(one, g) == Ordering::Less) positives.push_back(g);

  ConradianResult<E> result;
  detail::for_each_pair(positives.size(), limits, [&](std::size_t i, std::size_t j) {
    if (result.counterexample) return;
    const E& g = positives[i];
    const E& h = positives[j];
    ++result.checked;
    const E hgg = oracle.multiply(h, oracle.multiply(g, g));
    if (oracle.compare(g, hgg) != Ordering::Less) result.counterexample = std::make_pair(g, h);
  });
  return result;
}

/// Sorts the ball by the order, ranks it, and checks that left
/// multiplication by each multiplier is strictly increasing on ranks wherever
/// both products land back in the ball. Duplicate ball elements are reported
/// with kind "duplicate".
template <OrderOracle O>
Report rank_embedding_monotone(const O& oracle, std::span<const typename O::Element> ball,
                               std::span<const typename O::Element> multipliers) {
  using E = typename O::Element;
  Report report;
  std::vector<E> sorted(ball.begin(), ball.end());
  const auto less = [&](const E& a, const E& b) { return oracle.compare(a, b) == Ordering::Less; };
  std::stable_sort(sorted.begin(), sorted.end(), less);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (oracle.compare(sorted[i - 1], sorted[i]) != Ordering::Less)
      report.violations.push_back({"duplicate", json::array({oracle.to_json(sorted[i - 1]), oracle.to_json(sorted[i])})});
  }

  const auto rank_of = [&](const E& x) -> std::optional<std::size_t> {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x, less);
    if (it != sorted.end() && oracle.compare(*it, x) == Ordering::Equal)
      return static_cast<std::size_t>(it - sorted.begin());
    return std::nullopt;
  };

  for (const auto& m : multipliers) {
    std::optional<std::pair<std::size_t, std::size_t>> previous;  // (source rank, image rank)
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const auto image = rank_of(oracle.multiply(m, sorted[i]));
      if (!image) continue;
      ++report.checked;
      if (previous && previous->second >= *image) {
        report.violations.push_back({"monotone", json::array({oracle.to_json(m), oracle.to_json(sorted[previous->first]),
                                                              oracle.to_json(sorted[i])})});
      }
      previous = std::make_pair(i, *image);
    }
  }
  return report;
}

}  // namespace ordgrp
