#pragma once

#include <optional>
#include <vector>

#include "su11/multipoly.hpp"
#include "su11/report.hpp"

namespace su11 {

/// Scalar data of one session: particle number, coupling, the derived
/// ground-state constant and the optional oscillator frequency.
struct SystemParams {
  int n_particles = 2;
  Rational lambda;
  Rational e0;  // lambda*N*(N-1)/2 + N/2, never user-supplied
  std::optional<Rational> omega;

  static SystemParams make(int n_particles, const Rational& lambda,
                           std::optional<Rational> omega = std::nullopt);

  /// Lowest weight carried by a degree-m zero-energy polynomial:
  /// mu_m = -(m + E0 - 1/2)/2.
  Rational mu_of(int degree) const;
};

// Generator actions on symmetric, translation-invariant polynomials.
// All four enforce the domain precondition and throw NonSymmetricInput /
// NotTranslationInvariant when violated.

/// (1/2) sum_i d_i^2 p + (lambda/2) sum_{i != j} [(d_i - d_j)p]/(x_i - x_j),
/// the ordered pair sum computed as twice the i < j sum via exact
/// difference division. Lowers degree by 2.
MultiPoly apply_t_plus(const MultiPoly& p, const SystemParams& params);

/// -(1/2)(sum_i x_i d_i + E0 - 1/2) p; acts per graded component, scaling
/// degree-m terms by mu_m.
MultiPoly apply_t_zero(const MultiPoly& p, const SystemParams& params);

/// Multiplication by (1/2) sum_i (x_i - X)^2. Raises degree by 2.
MultiPoly apply_t_minus(const MultiPoly& p, const SystemParams& params);

/// T+ T- p - T0 (T0 - 1) p.
MultiPoly apply_casimir(const MultiPoly& p, const SystemParams& params);

/// Residuals of the three su(1,1) brackets on each basis element:
/// [T+,T-] + 2 T0, [T0,T+] - T+, [T0,T-] + T-.
VerificationReport check_su11_commutators(const std::vector<MultiPoly>& basis,
                                          const SystemParams& params);

/// Residual of [T+, f(T-)] - T- f''(T-) + 2 f'(T-) T0 applied to p, with f
/// a univariate polynomial given by ascending coefficients.
VerificationReport check_commutator_formula(const std::vector<GaussScalar>& f_coeffs,
                                            const MultiPoly& p, const SystemParams& params);

/// Compares, at one rational point with pairwise-distinct coordinates, the
/// similarity-transformed inverse-square Hamiltonian (expanded through
/// logarithmic derivatives of the Vandermonde factor, so only rational
/// quantities appear) against the polynomial generator route.
VerificationReport jastrow_conjugation_check(const MultiPoly& p,
                                             const std::vector<Rational>& point,
                                             const SystemParams& params);

}  // namespace su11
