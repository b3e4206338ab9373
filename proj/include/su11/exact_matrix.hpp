#pragma once

#include <optional>
#include <vector>

#include "su11/gauss.hpp"

namespace su11 {

/// Dense matrix over Q(i); every entry exact.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussScalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const GaussScalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

 private:
  int rows_;
  int cols_;
  std::vector<GaussScalar> a_;
};

/// Canonical kernel basis of M over Q(i).
///
/// Forward pass is fraction-free (Bareiss) elimination on the
/// denominator-cleared matrix, pivots at the lowest available column;
/// the kernel is then reduced so each basis vector leads with 1 at a
/// distinct column, ordered by leading column.
std::vector<std::vector<GaussScalar>> exact_nullspace(const ExactMatrix& m);

/// Unique exact solution of A x = b when it exists; nullopt when the
/// system is inconsistent. Free coordinates (rank-deficient A) are fixed
/// to zero, which is exact for the full-column-rank uses in this project.
std::optional<std::vector<GaussScalar>> solve_exact(const ExactMatrix& a,
                                                    const std::vector<GaussScalar>& b);

}  // namespace su11
