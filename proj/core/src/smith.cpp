#include "ordgrp/smith.hpp"

#include <cstdlib>

#include "ordgrp/error.hpp"

namespace ordgrp::pres {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::CoefficientOverflow, "Smith normal form overflow");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::CoefficientOverflow, "Smith normal form overflow");
  return out;
}

struct Work {
  SmithForm s;

  // row i += k * row j
  void row_add(std::size_t i, std::size_t j, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < s.cols; ++c) s.D[i][c] = add(s.D[i][c], mul(k, s.D[j][c]));
    for (std::size_t c = 0; c < s.rows; ++c) s.U[i][c] = add(s.U[i][c], mul(k, s.U[j][c]));
    for (std::size_t r = 0; r < s.rows; ++r) s.Uinv[r][j] = add(s.Uinv[r][j], mul(-k, s.Uinv[r][i]));
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(s.D[i], s.D[j]);
    std::swap(s.U[i], s.U[j]);
    for (std::size_t r = 0; r < s.rows; ++r) std::swap(s.Uinv[r][i], s.Uinv[r][j]);
  }
  void row_negate(std::size_t i) {
    for (auto& x : s.D[i]) x = -x;
    for (auto& x : s.U[i]) x = -x;
    for (std::size_t r = 0; r < s.rows; ++r) s.Uinv[r][i] = -s.Uinv[r][i];
  }
  // col i += k * col j
  void col_add(std::size_t i, std::size_t j, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < s.rows; ++r) s.D[r][i] = add(s.D[r][i], mul(k, s.D[r][j]));
    for (std::size_t r = 0; r < s.cols; ++r) s.V[r][i] = add(s.V[r][i], mul(k, s.V[r][j]));
    for (std::size_t c = 0; c < s.cols; ++c) s.Vinv[j][c] = add(s.Vinv[j][c], mul(-k, s.Vinv[i][c]));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < s.rows; ++r) std::swap(s.D[r][i], s.D[r][j]);
    for (std::size_t r = 0; r < s.cols; ++r) std::swap(s.V[r][i], s.V[r][j]);
    std::swap(s.Vinv[i], s.Vinv[j]);
  }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
  const std::size_t rows = a.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = add(out[i][j], mul(a[i][k], b[k][j]));
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (D[i][i] != 0) ++r;
  return r;
}

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) out.push_back(D[i][i]);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  Work w;
  w.s.rows = a.size();
  w.s.cols = a.empty() ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != w.s.cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
  w.s.D = a;
  w.s.U = w.s.Uinv = identity_matrix(w.s.rows);
  w.s.V = w.s.Vinv = identity_matrix(w.s.cols);
  auto& D = w.s.D;
  const std::size_t m = w.s.rows;
  const std::size_t n = w.s.cols;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (pi == m || std::llabs(D[i][j]) < std::llabs(D[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return w.s;  // trailing block is zero
      w.row_swap(t, pi);
      w.col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        w.row_add(i, t, -floor_div(D[i][t], D[t][t]));
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        w.col_add(j, t, -floor_div(D[t][j], D[t][t]));
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            w.row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[t][t] < 0) w.row_negate(t);
  }
  return w.s;
}

bool check_smith(const IntMatrix& a, const SmithForm& s) {
  const std::size_t m = s.rows;
  const std::size_t n = s.cols;
  if (a.size() != m || s.D.size() != m) return false;
  const auto square = [](const IntMatrix& x, std::size_t k) {
    if (x.size() != k) return false;
    for (const auto& row : x)
      if (row.size() != k) return false;
    return true;
  };
  if (!square(s.U, m) || !square(s.Uinv, m) || !square(s.V, n) || !square(s.Vinv, n)) return false;
  for (const auto& row : s.D)
    if (row.size() != n) return false;
  for (const auto& row : a)
    if (row.size() != n) return false;
  try {
    if (multiply(multiply(s.U, a, m), s.V, n) != s.D) return false;
    if (multiply(s.U, s.Uinv, m) != identity_matrix(m)) return false;
    if (multiply(s.V, s.Vinv, n) != identity_matrix(n)) return false;
  } catch (const Error&) {
    return false;
  }
  std::int64_t previous = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t d = s.D[i][j];
      if (i != j) {
        if (d != 0) return false;
        continue;
      }
      if (d < 0) return false;
      if (d == 0) {
        seen_zero = true;
        continue;
      }
      if (seen_zero || d % previous != 0) return false;
      previous = d;
    }
  return true;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m;
  for (const auto& r : p.relators) m.push_back(exponent_vector(r, p));
  return m;
}

Abelianization abelianization_from_smith(const SmithForm& s) {
  Abelianization out;
  out.rank = s.cols - s.rank();
  for (auto d : s.diagonal())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

Abelianization abelianization(const Presentation& p) {
  IntMatrix m = exponent_matrix(p);
  if (m.empty()) return {p.generators.size(), {}};
  return abelianization_from_smith(smith_normal_form(m));
}

json to_json(const Abelianization& a) { return json{{"rank", a.rank}, {"torsion", a.torsion}}; }

RelationLattice::RelationLattice(const Presentation& p) {
  IntMatrix m = exponent_matrix(p);
  if (m.empty()) {
    smith_.cols = p.generators.size();
    smith_.V = smith_.Vinv = identity_matrix(smith_.cols);
    return;
  }
  smith_ = smith_normal_form(m);
}

bool RelationLattice::contains(const std::vector<std::int64_t>& v) const {
  // v = y A  <=>  v V = (y U^-1) D, so (v V)_j must be a multiple of d_j.
  const std::size_t n = smith_.cols;
  const auto diag = smith_.diagonal();
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t z = 0;
    for (std::size_t k = 0; k < n; ++k) z += v[k] * smith_.V[k][j];
    const std::int64_t d = j < diag.size() ? diag[j] : 0;
    if (d == 0 ? z != 0 : z % d != 0) return false;
  }
  return true;
}

}  // namespace ordgrp::pres
