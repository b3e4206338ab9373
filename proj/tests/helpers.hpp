#pragma once

#include <vector>

#include "su11/calogero.hpp"
#include "su11/exact_matrix.hpp"
#include "su11/multipoly.hpp"
#include "su11/radial.hpp"
#include "su11/rng.hpp"

namespace su11::testing {

/// Random symmetric translation-invariant polynomial: a seeded combination
/// of invariant basis elements with degrees up to max_degree.
inline MultiPoly random_invariant_poly(Rng& rng, int n, int max_degree) {
  MultiPoly p(n);
  bool nonzero = false;
  for (int m = 0; m <= max_degree; ++m) {
    InvariantBasis basis = invariant_basis(n, m);
    for (const auto& e : basis.elements) {
      if (rng.int_in(0, 2) == 0) continue;
      p = p + e.scaled(rng.gauss(5, 4));
      nonzero = true;
    }
  }
  if (!nonzero) p = p + MultiPoly::constant(n, GaussScalar(1));
  return p;
}

inline std::vector<Rational> distinct_point(Rng& rng, int n) {
  while (true) {
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) pt.push_back(rng.rational(15, 5));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if (pt[i] == pt[j]) {
          ok = false;
          break;
        }
    if (ok) return pt;
  }
}

/// Realizes a beta = 0 radial vector concretely: sum_j c_j T-^j applied to
/// the polynomial p.
inline MultiPoly realize(const RadialVector& v, const MultiPoly& p, const SystemParams& params) {
  MultiPoly acc(p.n_vars());
  int max_j = 0;
  for (const auto& [j, c] : v.coeffs()) max_j = std::max(max_j, j);
  MultiPoly tower = p;
  for (int j = 0; j <= max_j; ++j) {
    if (j > 0) tower = apply_t_minus(tower, params);
    GaussScalar c = v.coeff(j);
    if (!c.is_zero()) acc = acc + tower.scaled(c);
  }
  return acc;
}

// ---- independent elimination oracle ----------------------------------------
// Plain Gauss-Jordan over the field, written separately from the library's
// fraction-free route; used to cross-check kernels.

struct OracleRref {
  std::vector<std::vector<GaussScalar>> rows;
  std::vector<int> pivot_cols;
};

inline OracleRref oracle_rref(std::vector<std::vector<GaussScalar>> rows, int cols) {
  OracleRref out;
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(rows.size()); ++col) {
    int pr = -1;
    for (int r = row; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][col].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(rows[row], rows[pr]);
    GaussScalar inv = GaussScalar(1) / rows[row][col];
    for (int c = 0; c < cols; ++c) rows[row][c] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      GaussScalar f = rows[r][col];
      for (int c = 0; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rows = std::move(rows);
  return out;
}

inline std::vector<std::vector<GaussScalar>> oracle_nullspace(const ExactMatrix& m) {
  std::vector<std::vector<GaussScalar>> rows(m.rows(), std::vector<GaussScalar>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  OracleRref rref = oracle_rref(std::move(rows), m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rref.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<GaussScalar>> kernel;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussScalar> v(m.cols(), GaussScalar(0));
    v[f] = GaussScalar(1);
    for (size_t i = 0; i < rref.pivot_cols.size(); ++i)
      v[rref.pivot_cols[i]] = -rref.rows[i][f];
    kernel.push_back(std::move(v));
  }
  // Same canonical form as the library output: reduced echelon of the
  // kernel with unit leading entries.
  if (kernel.empty()) return kernel;
  OracleRref canon = oracle_rref(std::move(kernel), m.cols());
  std::vector<std::vector<GaussScalar>> out;
  for (size_t i = 0; i < canon.pivot_cols.size(); ++i) out.push_back(canon.rows[i]);
  return out;
}

}  // namespace su11::testing
