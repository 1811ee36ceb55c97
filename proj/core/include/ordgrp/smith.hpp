#pragma once

// Smith normal form over the integers and the abelianization it computes.

#include <cstdint>
#include <vector>

#include "ordgrp/presentation.hpp"

namespace ordgrp::pres {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// U * A * V = D with U, V unimodular, D diagonal, d_1 | d_2 | ... and every
/// d_i >= 0. Uinv and Vinv are the inverses, kept so the result can be
/// checked without inverting anything.
struct SmithForm {
  IntMatrix D, U, V, Uinv, Vinv;
  std::size_t rows = 0, cols = 0;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  std::vector<std::int64_t> diagonal() const;
};

/// Throws CoefficientOverflow if an intermediate entry leaves the int64 range.
SmithForm smith_normal_form(const IntMatrix& a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner);
IntMatrix identity_matrix(std::size_t n);

/// Every identity above holds, with the divisibility chain.
bool check_smith(const IntMatrix& a, const SmithForm& s);

/// Rows are relators, columns generators, entries exponent sums.
IntMatrix exponent_matrix(const Presentation& p);

/// Z^rank + Z/d_1 + ... with every d_i >= 2 and d_i | d_{i+1}.
struct Abelianization {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

Abelianization abelianization(const Presentation& p);
Abelianization abelianization_from_smith(const SmithForm& s);
json to_json(const Abelianization& a);

/// Decides whether an exponent vector lies in the row lattice of the
/// relator matrix, i.e. whether a word with these exponent sums can be
/// trivial in the group. Used to skip words that are certainly nontrivial.
class RelationLattice {
 public:
  explicit RelationLattice(const Presentation& p);
  bool contains(const std::vector<std::int64_t>& v) const;

 private:
  SmithForm smith_;
};

}  // namespace ordgrp::pres
