#include "ordgrp/pl_line.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ordgrp/error.hpp"

namespace ordgrp::pl {

namespace {

Rational slope(const Breakpoint& a, const Breakpoint& b) { return (b.y - a.y) / (b.x - a.x); }

}  // namespace

PLMap::PLMap() : points_{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}} {}

PLMap pl_make(std::vector<Breakpoint> points) {
  if (points.size() < 2 || points.front() != Breakpoint{0, 0} || points.back() != Breakpoint{1, 1})
    throw Error(ErrorCode::BadEndpoints, "breakpoints must start at (0,0) and end at (1,1)");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x <= points[i - 1].x || points[i].y <= points[i - 1].y)
      throw Error(ErrorCode::NotMonotone, "breakpoint " + std::to_string(i) + " does not increase in both coordinates");
  }
  std::vector<Breakpoint> kept{points.front()};
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (slope(kept.back(), points[i]) != slope(points[i], points[i + 1])) kept.push_back(points[i]);
  }
  kept.push_back(points.back());
  PLMap f;
  f.points_ = std::move(kept);
  return f;
}

Rational pl_eval(const PLMap& f, const Rational& x) {
  if (x < 0 || x > 1) throw Error(ErrorCode::OutOfDomain, "pl_eval outside [0,1]: " + format_rational(x));
  const auto& p = f.breakpoints();
  auto it = std::lower_bound(p.begin(), p.end(), x, [](const Breakpoint& b, const Rational& t) { return b.x < t; });
  if (it->x == x) return it->y;
  const Breakpoint& right = *it;
  const Breakpoint& left = *(it - 1);
  return left.y + (x - left.x) * slope(left, right);
}

PLMap pl_invert(const PLMap& f) {
  std::vector<Breakpoint> swapped;
  for (const auto& b : f.breakpoints()) swapped.push_back({b.y, b.x});
  return pl_make(std::move(swapped));
}

PLMap pl_compose(const PLMap& f, const PLMap& g) {
  const PLMap g_inv = pl_invert(g);
  std::vector<Rational> xs;
  for (const auto& b : g.breakpoints()) xs.push_back(b.x);
  for (const auto& b : f.breakpoints()) xs.push_back(pl_eval(g_inv, b.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> points;
  for (const auto& x : xs) points.push_back({x, pl_eval(f, pl_eval(g, x))});
  return pl_make(std::move(points));
}

Sign chehata_sign(const PLMap& f) {
  const auto& p = f.breakpoints();
  for (std::size_t i = 1; i < p.size(); ++i) {
    const Rational s = slope(p[i - 1], p[i]);
    if (s != 1) return s > 1 ? Sign::Positive : Sign::Negative;
  }
  return Sign::Zero;
}

Ordering chehata_compare(const PLMap& f, const PLMap& g) {
  return ordering_from_quotient_sign(chehata_sign(pl_compose(pl_invert(f), g)));
}

CalkinWilf::CalkinWilf() : q_(Rational(1, 2)) {}

Rational CalkinWilf::next() {
  const Rational out = q_;
  do {
    const BigInt fl = numerator(q_) / denominator(q_);
    q_ = 1 / (Rational(2 * fl) - q_ + 1);
  } while (q_ >= 1);
  return out;
}

Ordering testpoint_compare(const PLMap& f, const PLMap& g, std::uint64_t probe_cap) {
  if (f == g) return Ordering::Equal;
  CalkinWilf e;
  for (std::uint64_t i = 0; i < probe_cap; ++i) {
    const Rational x = e.next();
    const Rational fx = pl_eval(f, x);
    const Rational gx = pl_eval(g, x);
    if (fx != gx) return fx < gx ? Ordering::Less : Ordering::Greater;
  }
  throw Error(ErrorCode::ProbeCapExceeded,
              "distinct maps agree on the first " + std::to_string(probe_cap) + " enumerated rationals");
}

json to_json(const PLMap& f) {
  json pts = json::array();
  for (const auto& b : f.breakpoints()) pts.push_back(json::array({rational_to_json(b.x), rational_to_json(b.y)}));
  return json{{"breakpoints", pts}};
}

PLMap pl_from_json(const json& j) {
  try {
    std::vector<Breakpoint> points;
    for (const auto& pair : j.at("breakpoints")) {
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, "breakpoint must be a pair");
      points.push_back({rational_from_json(pair[0]), rational_from_json(pair[1])});
    }
    return pl_make(std::move(points));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("PL map JSON: ") + e.what());
  }
}

PLMap parse_pl(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return pl_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  std::vector<Breakpoint> points;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto comma = token.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "expected x,y but got '" + token + "'");
    points.push_back({parse_rational(std::string_view(token).substr(0, comma)),
                      parse_rational(std::string_view(token).substr(comma + 1))});
  }
  return pl_make(std::move(points));
}

std::string format_pl(const PLMap& f) {
  std::string out;
  for (const auto& b : f.breakpoints()) {
    if (!out.empty()) out += ' ';
    out += format_rational(b.x) + "," + format_rational(b.y);
  }
  return out;
}

SampleSet<PLMap> sample_pl_maps(std::size_t count, std::size_t max_interior, std::uint64_t seed) {
  constexpr std::int64_t kGrid = 24;
  Rng rng(seed);
  SampleSet<PLMap> out;
  out.seed = seed;
  const auto draw_sorted = [&](std::size_t k) {
    std::vector<std::int64_t> pool(kGrid - 1);
    std::iota(pool.begin(), pool.end(), std::int64_t{1});
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  const std::size_t cap = std::min<std::size_t>(std::max<std::size_t>(max_interior, 1), kGrid - 1);
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t k = 1 + uniform_below(rng, cap);
    const auto xs = draw_sorted(k);
    const auto ys = draw_sorted(k);
    std::vector<Breakpoint> points{{0, 0}};
    for (std::size_t i = 0; i < k; ++i) points.push_back({Rational(xs[i], kGrid), Rational(ys[i], kGrid)});
    points.push_back({1, 1});
    out.elements.push_back(pl_make(std::move(points)));
  }
  return out;
}

}  // namespace ordgrp::pl
