#pragma once

// Piecewise-linear homeomorphisms of [0, 1] fixing both endpoints, with
// rational breakpoints. Group product is composition: (f * g)(x) = f(g(x)).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordgrp/order_core.hpp"
#include "ordgrp/rational.hpp"

namespace ordgrp::pl {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Normalized: starts at (0,0), ends at (1,1), both coordinates strictly
/// increasing, no two adjacent segments with the same slope. Only pl_make and
/// the operations below produce values, so structural equality is group
/// equality.
class PLMap {
 public:
  PLMap();  // identity

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  bool is_identity() const { return points_.size() == 2; }
  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  friend PLMap pl_make(std::vector<Breakpoint> points);
  std::vector<Breakpoint> points_;
};

/// Throws BadEndpoints or NotMonotone; merges collinear segments.
PLMap pl_make(std::vector<Breakpoint> points);

/// Throws OutOfDomain outside [0, 1].
Rational pl_eval(const PLMap& f, const Rational& x);
/// x -> f(g(x)).
PLMap pl_compose(const PLMap& f, const PLMap& g);
PLMap pl_invert(const PLMap& f);

/// Positive iff f first leaves the diagonal upward: the first segment whose
/// slope differs from 1 has slope > 1.
Sign chehata_sign(const PLMap& f);
/// f < g iff f^{-1} g is Chehata-positive. A bi-order.
Ordering chehata_compare(const PLMap& f, const PLMap& g);

/// The Calkin-Wilf sequence restricted to (0, 1): 1/2, 1/3, 2/3, 1/4, 3/5,
/// 2/5, 3/4, ... Every rational in (0, 1) occurs exactly once.
class CalkinWilf {
 public:
  CalkinWilf();
  /// Returns the current term and advances.
  Rational next();

 private:
  Rational q_;
};

inline constexpr std::uint64_t kDefaultProbeCap = 1'000'000;

/// Equal iff f == g (structurally, no probing). Otherwise f < g iff
/// f(x) < g(x) at the first enumerated x where they differ. A left order.
/// Throws ProbeCapExceeded if no difference shows up within probe_cap terms.
Ordering testpoint_compare(const PLMap& f, const PLMap& g, std::uint64_t probe_cap = kDefaultProbeCap);

json to_json(const PLMap& f);
/// {"breakpoints": [[x, y], ...]} with rationals in any form rational_from_json accepts.
PLMap pl_from_json(const json& j);
/// JSON as above, or whitespace-separated "x,y" pairs such as "0,0 1/2,1/4 1,1".
PLMap parse_pl(std::string_view text);
std::string format_pl(const PLMap& f);

class ChehataOracle {
 public:
  using Element = PLMap;

  Ordering compare(const PLMap& f, const PLMap& g) const { return chehata_compare(f, g); }
  PLMap multiply(const PLMap& f, const PLMap& g) const { return pl_compose(f, g); }
  PLMap invert(const PLMap& f) const { return pl_invert(f); }
  PLMap identity() const { return {}; }
  json to_json(const PLMap& f) const { return pl::to_json(f); }
};

class TestPointOracle {
 public:
  using Element = PLMap;

  explicit TestPointOracle(std::uint64_t probe_cap = kDefaultProbeCap) : probe_cap_(probe_cap) {}

  Ordering compare(const PLMap& f, const PLMap& g) const { return testpoint_compare(f, g, probe_cap_); }
  PLMap multiply(const PLMap& f, const PLMap& g) const { return pl_compose(f, g); }
  PLMap invert(const PLMap& f) const { return pl_invert(f); }
  PLMap identity() const { return {}; }
  json to_json(const PLMap& f) const { return pl::to_json(f); }

 private:
  std::uint64_t probe_cap_;
};

/// Each map gets a number of interior breakpoints drawn uniformly from
/// [1, max_interior]; their coordinates are distinct multiples of 1/24 on
/// each axis, sorted. Collinear draws normalize to fewer breakpoints.
SampleSet<PLMap> sample_pl_maps(std::size_t count, std::size_t max_interior, std::uint64_t seed);

}  // namespace ordgrp::pl
