#include "ordgrp/lattice_ext.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ordgrp/error.hpp"

namespace ordgrp::lattice {

namespace {

Rational dot(const RationalVector& w, const IntVector& x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * x[i];
  return acc;
}

Rational dot(const RationalVector& w, const RationalVector& x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * x[i];
  return acc;
}

Sign sign_of(const Rational& q) { return q > 0 ? Sign::Positive : q < 0 ? Sign::Negative : Sign::Zero; }

void check_dimension(const IntVector& x, const WeightOrder& order) {
  if (x.size() != order.dimension)
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(x.size()) + " in Z^" + std::to_string(order.dimension));
}

RationalVector unit(std::size_t n, std::size_t i) {
  RationalVector e(n, Rational(0));
  e[i] = 1;
  return e;
}

bool positively_proportional(const RationalVector& a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return dot(a, b) > 0;
}

// Next vector of {-r..r}^n in lexicographic order; false after the last.
bool next_in_box(IntVector& v, std::int64_t r) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < r) {
      ++v[i];
      return true;
    }
    v[i] = -r;
  }
  return false;
}

}  // namespace

WeightOrder lex_order(std::size_t n) {
  WeightOrder order;
  order.dimension = n;
  for (std::size_t i = 0; i < n; ++i) order.weights.push_back(unit(n, i));
  order.tie_break.resize(n);
  std::iota(order.tie_break.begin(), order.tie_break.end(), std::size_t{0});
  return order;
}

void validate(const WeightOrder& order) {
  for (const auto& w : order.weights)
    if (w.size() != order.dimension) throw Error(ErrorCode::DimensionMismatch, "weight vector has wrong length");
  std::vector<std::size_t> sorted = order.tie_break;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw Error(ErrorCode::DimensionMismatch, "tie-break is not a permutation");
  if (sorted.size() != order.dimension) throw Error(ErrorCode::DimensionMismatch, "tie-break has wrong length");
}

Sign zn_sign(const IntVector& x, const WeightOrder& order) {
  check_dimension(x, order);
  for (const auto& w : order.weights) {
    const Sign s = sign_of(dot(w, x));
    if (s != Sign::Zero) return s;
  }
  for (std::size_t i : order.tie_break) {
    if (x[i] != 0) return x[i] > 0 ? Sign::Positive : Sign::Negative;
  }
  return Sign::Zero;
}

Ordering zn_compare(const IntVector& u, const IntVector& v, const WeightOrder& order) {
  check_dimension(u, order);
  check_dimension(v, order);
  IntVector diff(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) diff[i] = v[i] - u[i];
  return ordering_from_quotient_sign(zn_sign(diff, order));
}

Perturbation sikora_perturb(const WeightOrder& order, const std::vector<IntVector>& constraints) {
  validate(order);
  const std::size_t n = order.dimension;
  for (const auto& c : constraints) {
    check_dimension(c, order);
    if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; }))
      throw Error(ErrorCode::ZeroConstraint, "the zero vector cannot be a strict inequality");
    if (zn_sign(c, order) != Sign::Positive)
      throw Error(ErrorCode::InfeasibleConstraints, "constraint is not positive in the input order");
  }
  if (n < 2) throw Error(ErrorCode::IsolatedOrder, "Z has exactly two orders; none is a perturbation of another");

  RationalVector leading;
  for (const auto& w : order.weights) {
    if (std::any_of(w.begin(), w.end(), [](const Rational& q) { return q != 0; })) {
      leading = w;
      break;
    }
  }
  if (leading.empty()) leading = unit(n, order.tie_break.front());

  std::vector<RationalVector> keep;  // must stay strictly positive under the new leading weight
  for (const auto& c : constraints) keep.emplace_back(c.begin(), c.end());
  keep.push_back(leading);

  std::vector<RationalVector> basis = order.weights;
  const bool weights_decide_all = std::all_of(keep.begin(), keep.end(), [&](const RationalVector& c) {
    return std::any_of(order.weights.begin(), order.weights.end(), [&](const auto& w) { return dot(w, c) != 0; });
  });
  if (!weights_decide_all)
    for (std::size_t i : order.tie_break) basis.push_back(unit(n, i));

  const auto admissible = [&](const RationalVector& w) {
    return std::all_of(keep.begin(), keep.end(), [&](const RationalVector& c) { return dot(w, c) > 0; });
  };

  RationalVector g;
  Rational eps = 1;
  for (int attempt = 0; attempt < 512 && g.empty(); ++attempt, eps /= 2) {
    RationalVector candidate(n, Rational(0));
    Rational scale = 1;
    for (const auto& b : basis) {
      for (std::size_t i = 0; i < n; ++i) candidate[i] += scale * b[i];
      scale *= eps;
    }
    if (admissible(candidate)) g = std::move(candidate);
  }
  if (g.empty()) throw std::logic_error("sikora_perturb: no generic functional realizes the order");

  std::vector<RationalVector> directions;
  for (std::size_t i = n; i-- > 0;) directions.push_back(unit(n, i));
  for (std::size_t i = n; i-- > 0;) {
    RationalVector d = unit(n, i);
    d[i] = -1;
    directions.push_back(std::move(d));
  }

  RationalVector new_leading;
  for (const auto& d : directions) {
    Rational delta = 1;
    for (int attempt = 0; attempt < 64; ++attempt, delta /= 2) {
      RationalVector w = g;
      for (std::size_t i = 0; i < n; ++i) w[i] += delta * d[i];
      if (admissible(w) && !positively_proportional(w, leading)) {
        new_leading = std::move(w);
        break;
      }
    }
    if (!new_leading.empty()) break;
  }
  if (new_leading.empty()) throw std::logic_error("sikora_perturb: no admissible perturbation direction");

  Perturbation out;
  out.order = order;
  out.order.weights.insert(out.order.weights.begin(), new_leading);

  for (std::int64_t r = 1; r <= 4096; ++r) {
    IntVector v(n, -r);
    do {
      if (std::none_of(v.begin(), v.end(), [&](std::int64_t x) { return x == r || x == -r; })) continue;
      if (zn_sign(v, order) == Sign::Positive && zn_sign(v, out.order) == Sign::Negative) {
        out.witness = v;
        return out;
      }
    } while (next_in_box(v, r));
  }
  throw std::logic_error("sikora_perturb: witness search exhausted");
}

json to_json(const WeightOrder& order) {
  json weights = json::array();
  for (const auto& w : order.weights) {
    json row = json::array();
    for (const auto& q : w) row.push_back(rational_to_json(q));
    weights.push_back(row);
  }
  return json{{"dimension", order.dimension}, {"weights", weights}, {"tie_break", order.tie_break}};
}

WeightOrder weight_order_from_json(const json& j) {
  try {
    WeightOrder order;
    order.dimension = j.at("dimension").get<std::size_t>();
    for (const auto& row : j.at("weights")) {
      RationalVector w;
      for (const auto& q : row) w.push_back(rational_from_json(q));
      order.weights.push_back(std::move(w));
    }
    if (j.contains("tie_break")) {
      order.tie_break = j.at("tie_break").get<std::vector<std::size_t>>();
    } else {
      order.tie_break.resize(order.dimension);
      std::iota(order.tie_break.begin(), order.tie_break.end(), std::size_t{0});
    }
    validate(order);
    return order;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("weight order JSON: ") + e.what());
  }
}

IntVector ZnOracle::multiply(const IntVector& u, const IntVector& v) const {
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

IntVector ZnOracle::invert(const IntVector& u) const {
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = -u[i];
  return out;
}

std::vector<IntVector> integer_box(std::size_t n, std::int64_t bound) {
  std::vector<IntVector> out;
  IntVector v(n, -bound);
  do {
    out.push_back(v);
  } while (next_in_box(v, bound));
  return out;
}

// --- Klein ------------------------------------------------------------------

KleinElement klein_mul(const KleinElement& a, const KleinElement& b) {
  const std::int64_t twist = (a.n % 2 == 0) ? 1 : -1;
  return {a.m + twist * b.m, a.n + b.n};
}

KleinElement klein_inv(const KleinElement& a) {
  const std::int64_t twist = (a.n % 2 == 0) ? 1 : -1;  // (-1)^{-n} = (-1)^n
  return {-twist * a.m, -a.n};
}

Sign klein_sign(const KleinElement& a) {
  if (a.n != 0) return a.n > 0 ? Sign::Positive : Sign::Negative;
  if (a.m != 0) return a.m > 0 ? Sign::Positive : Sign::Negative;
  return Sign::Zero;
}

Ordering klein_compare(const KleinElement& a, const KleinElement& b) {
  return ordering_from_quotient_sign(klein_sign(klein_mul(klein_inv(a), b)));
}

json to_json(const KleinElement& a) { return json::array({a.m, a.n}); }

KleinElement klein_from_json(const json& j) {
  try {
    if (j.is_array() && j.size() == 2) return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
    return {j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("Klein element JSON: ") + e.what());
  }
}

std::vector<KleinElement> klein_box(std::int64_t bound) {
  std::vector<KleinElement> out;
  for (std::int64_t m = -bound; m <= bound; ++m)
    for (std::int64_t n = -bound; n <= bound; ++n) out.push_back({m, n});
  return out;
}

// --- Germs ------------------------------------------------------------------

GermElement make_germ(Rational s, Rational r) {
  if (r <= 0) throw Error(ErrorCode::OutOfDomain, "germ needs r > 0");
  return {std::move(s), std::move(r)};
}

GermElement germ_mul(const GermElement& a, const GermElement& b) { return {b.s + a.s * b.r, a.r * b.r}; }

GermElement germ_inv(const GermElement& a) { return {-a.s / a.r, 1 / a.r}; }

Sign germ_sign(const GermElement& a) {
  if (a.r != 1) return a.r > 1 ? Sign::Positive : Sign::Negative;
  return sign_of(a.s);
}

Ordering germ_compare(const GermElement& a, const GermElement& b) {
  return ordering_from_quotient_sign(germ_sign(germ_mul(germ_inv(a), b)));
}

json to_json(const GermElement& a) { return json{{"s", rational_to_json(a.s)}, {"r", rational_to_json(a.r)}}; }

GermElement germ_from_json(const json& j) {
  try {
    return make_germ(rational_from_json(j.at("s")), rational_from_json(j.at("r")));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("germ JSON: ") + e.what());
  }
}

SampleSet<GermElement> sample_germs(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  SampleSet<GermElement> out;
  out.seed = seed;
  for (std::size_t i = 0; i < count; ++i) {
    const Rational s(uniform_int(rng, -9, 9), uniform_int(rng, 1, 9));
    Rational r(uniform_int(rng, 1, 9), uniform_int(rng, 1, 9));
    if (uniform_below(rng, 4) == 0) r = 1;
    out.elements.push_back({s, r});
  }
  return out;
}

}  // namespace ordgrp::lattice
