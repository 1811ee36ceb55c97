#pragma once

// Orders on small concrete groups: weight-vector bi-orders on Z^n and their
// perturbation, the Klein bottle group x^m y^n, and the affine germ group of
// matrices [[1, s], [0, r]].

#include <cstdint>
#include <vector>

#include "ordgrp/order_core.hpp"
#include "ordgrp/rational.hpp"

namespace ordgrp::lattice {

using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// x > 0 iff the first nonzero entry of (<w_1,x>, ..., <w_k,x>,
/// x[tie_break[0]], ..., x[tie_break[n-1]]) is positive.
struct WeightOrder {
  std::size_t dimension = 0;
  std::vector<RationalVector> weights;
  std::vector<std::size_t> tie_break;  // permutation of 0..dimension-1

  friend bool operator==(const WeightOrder&, const WeightOrder&) = default;
};

/// Lexicographic order: weights e_1..e_n, identity tie-break.
WeightOrder lex_order(std::size_t n);
/// Throws DimensionMismatch unless every weight has length n and tie_break is a permutation.
void validate(const WeightOrder& order);

Sign zn_sign(const IntVector& x, const WeightOrder& order);
/// u < v iff v - u is positive. Throws DimensionMismatch.
Ordering zn_compare(const IntVector& u, const IntVector& v, const WeightOrder& order);

struct Perturbation {
  WeightOrder order;
  /// Positive in the input order, negative in the perturbed one.
  IntVector witness;
};

/// Returns a different order in which every constraint stays positive.
///
/// Let g be the functional sum_i eps^i w_i (followed by the tie-break unit
/// vectors, only when the weights leave some constraint undecided), with eps
/// halved from 1 until all constraints and the leading weight are strictly
/// positive under it. The new leading weight is g + delta*d for the first
/// direction d in e_n, ..., e_1, -e_n, ..., -e_1 and the largest delta in
/// 1, 1/2, 1/4, ... that keeps every constraint strictly positive and is not
/// a positive multiple of the old leading weight. The witness is the first vector, by max-norm radius and then
/// lexicographically, that the two orders classify differently.
///
/// Throws ZeroConstraint, InfeasibleConstraints (a constraint is not
/// positive), DimensionMismatch, or IsolatedOrder for n = 1, where Z has only
/// two orders.
Perturbation sikora_perturb(const WeightOrder& order, const std::vector<IntVector>& constraints);

json to_json(const WeightOrder& order);
WeightOrder weight_order_from_json(const json& j);

class ZnOracle {
 public:
  using Element = IntVector;

  explicit ZnOracle(WeightOrder order) : order_(std::move(order)) { validate(order_); }

  Ordering compare(const IntVector& u, const IntVector& v) const { return zn_compare(u, v, order_); }
  IntVector multiply(const IntVector& u, const IntVector& v) const;
  IntVector invert(const IntVector& u) const;
  IntVector identity() const { return IntVector(order_.dimension, 0); }
  json to_json(const IntVector& v) const { return json(v); }

 private:
  WeightOrder order_;
};

/// Every vector of {-bound..bound}^n in lexicographic order.
std::vector<IntVector> integer_box(std::size_t n, std::int64_t bound);

// --- Klein bottle group <x, y | y^{-1} x y = x^{-1}> -------------------------

/// The element x^m y^n.
struct KleinElement {
  std::int64_t m = 0;
  std::int64_t n = 0;
  friend bool operator==(const KleinElement&, const KleinElement&) = default;
};

/// (m1, n1)(m2, n2) = (m1 + (-1)^{n1} m2, n1 + n2).
KleinElement klein_mul(const KleinElement& a, const KleinElement& b);
KleinElement klein_inv(const KleinElement& a);
/// Positive iff n > 0, or n = 0 and m > 0.
Sign klein_sign(const KleinElement& a);
/// Left-invariant only.
Ordering klein_compare(const KleinElement& a, const KleinElement& b);

json to_json(const KleinElement& a);
KleinElement klein_from_json(const json& j);

class KleinOracle {
 public:
  using Element = KleinElement;

  Ordering compare(const KleinElement& a, const KleinElement& b) const { return klein_compare(a, b); }
  KleinElement multiply(const KleinElement& a, const KleinElement& b) const { return klein_mul(a, b); }
  KleinElement invert(const KleinElement& a) const { return klein_inv(a); }
  KleinElement identity() const { return {}; }
  json to_json(const KleinElement& a) const { return lattice::to_json(a); }
};

/// All x^m y^n with |m|, |n| <= bound, m outer.
std::vector<KleinElement> klein_box(std::int64_t bound);

// --- Germ group: [[1, s], [0, r]], r > 0 -------------------------------------

struct GermElement {
  Rational s{0};
  Rational r{1};
  friend bool operator==(const GermElement&, const GermElement&) = default;
};

/// Throws OutOfDomain unless r > 0.
GermElement make_germ(Rational s, Rational r);
/// Matrix product: (s1, r1)(s2, r2) = (s2 + s1 r2, r1 r2).
GermElement germ_mul(const GermElement& a, const GermElement& b);
/// (-s/r, 1/r).
GermElement germ_inv(const GermElement& a);
/// Positive iff r > 1, or r = 1 and s > 0.
Sign germ_sign(const GermElement& a);
Ordering germ_compare(const GermElement& a, const GermElement& b);

json to_json(const GermElement& a);
GermElement germ_from_json(const json& j);

class GermOracle {
 public:
  using Element = GermElement;

  Ordering compare(const GermElement& a, const GermElement& b) const { return germ_compare(a, b); }
  GermElement multiply(const GermElement& a, const GermElement& b) const { return germ_mul(a, b); }
  GermElement invert(const GermElement& a) const { return germ_inv(a); }
  GermElement identity() const { return {}; }
  json to_json(const GermElement& a) const { return lattice::to_json(a); }
};

/// s = p/q with |p| <= 9, 1 <= q <= 9; r = p/q with 1 <= p, q <= 9; one
/// sample in four has r = 1 so the kernel {r = 1} is exercised.
SampleSet<GermElement> sample_germs(std::size_t count, std::uint64_t seed);

}  // namespace ordgrp::lattice
