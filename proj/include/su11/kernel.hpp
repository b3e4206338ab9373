#pragma once

#include <vector>

#include <json.hpp>

#include "su11/calogero.hpp"
#include "su11/exact_matrix.hpp"

namespace su11 {

/// Matrix of T+ restricted to degree m: columns indexed by
/// invariant_basis(N, m), rows by invariant_basis(N, m-2); coordinates
/// obtained by exact solves against the target basis.
ExactMatrix assemble_t_plus_matrix(const SystemParams& params, int m);

/// Zero-energy polynomials of one graded piece: the T+ kernel at degree m.
struct KernelBasis {
  SystemParams params;
  int degree = 0;
  Rational mu;
  std::vector<std::vector<GaussScalar>> coordinates;  // in invariant_basis(N, m)
  std::vector<MultiPoly> vectors;

  int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Computes the kernel basis and re-verifies every vector against the
/// concrete generators (T+ annihilation and the T0 eigenvalue).
KernelBasis zero_energy_states(const SystemParams& params, int m);

nlohmann::ordered_json kernel_to_json(const KernelBasis& k);

/// Expresses an invariant polynomial in the given basis; nullopt when it
/// lies outside the span.
std::optional<std::vector<GaussScalar>> coordinates_in_basis(const MultiPoly& p,
                                                             const InvariantBasis& basis);

}  // namespace su11
