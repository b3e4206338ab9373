#include "su11/exact_matrix.hpp"

#include <algorithm>

namespace su11 {

namespace {

// Row-wise denominator clearing: returns entries in Z[i].
void clear_denominators(ExactMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class l(1);
    for (int c = 0; c < m.cols(); ++c) {
      const GaussScalar& z = m.at(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re.den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im.den().get_mpz_t());
    }
    if (l == 1) continue;
    GaussScalar f{Rational(l, mpz_class(1))};
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) *= f;
  }
}

struct Echelon {
  ExactMatrix m;
  std::vector<int> pivot_cols;  // one per pivot row, ascending
};

// Fraction-free forward elimination. Entries must be in Z[i]; every
// division below is exact by the Bareiss identity.
Echelon bareiss_echelon(ExactMatrix m) {
  clear_denominators(m);
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  GaussScalar prev_pivot{Rational(1)};
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r) {
      if (!m.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < cols; ++c) std::swap(m.at(row, c), m.at(pr, c));

    const GaussScalar pivot = m.at(row, col);
    for (int r = row + 1; r < rows; ++r) {
      GaussScalar head = m.at(r, col);
      for (int c = col; c < cols; ++c) {
        m.at(r, c) = (m.at(r, c) * pivot - head * m.at(row, c)) / prev_pivot;
      }
    }
    prev_pivot = pivot;
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

// Back-substitution to reduced form over the field: leading 1 per pivot
// row, zeros above each pivot.
void reduce_echelon(Echelon& e) {
  const int cols = e.m.cols();
  for (int i = static_cast<int>(e.pivot_cols.size()) - 1; i >= 0; --i) {
    int pc = e.pivot_cols[i];
    GaussScalar inv = GaussScalar(1) / e.m.at(i, pc);
    for (int c = pc; c < cols; ++c) e.m.at(i, c) *= inv;
    for (int r = 0; r < i; ++r) {
      GaussScalar f = e.m.at(r, pc);
      if (f.is_zero()) continue;
      for (int c = pc; c < cols; ++c) e.m.at(r, c) -= f * e.m.at(i, c);
    }
  }
}

}  // namespace

std::vector<std::vector<GaussScalar>> exact_nullspace(const ExactMatrix& m) {
  const int n = m.cols();
  std::vector<std::vector<GaussScalar>> basis;
  if (n == 0) return basis;

  Echelon e = bareiss_echelon(m);
  reduce_echelon(e);

  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussScalar> v(n, GaussScalar(0));
    v[f] = GaussScalar(1);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
      v[e.pivot_cols[i]] = -e.m.at(static_cast<int>(i), f);
    }
    basis.push_back(std::move(v));
  }

  if (basis.empty()) return basis;

  // Canonical form: reduced echelon form of the kernel itself, so each
  // vector leads with 1 at a distinct column and vectors are ordered by
  // leading column.
  ExactMatrix k(static_cast<int>(basis.size()), n);
  for (size_t r = 0; r < basis.size(); ++r)
    for (int c = 0; c < n; ++c) k.at(static_cast<int>(r), c) = basis[r][c];
  Echelon ke = bareiss_echelon(std::move(k));
  reduce_echelon(ke);
  std::vector<std::vector<GaussScalar>> out;
  for (size_t i = 0; i < ke.pivot_cols.size(); ++i) {
    std::vector<GaussScalar> v(n);
    for (int c = 0; c < n; ++c) v[c] = ke.m.at(static_cast<int>(i), c);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<GaussScalar>> solve_exact(const ExactMatrix& a,
                                                    const std::vector<GaussScalar>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    fail(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  Echelon e = bareiss_echelon(std::move(aug));
  reduce_echelon(e);

  std::vector<GaussScalar> x(a.cols(), GaussScalar(0));
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
    int pc = e.pivot_cols[i];
    if (pc == a.cols()) return std::nullopt;  // pivot in the augmented column
    x[pc] = e.m.at(static_cast<int>(i), a.cols());
  }
  return x;
}

}  // namespace su11
