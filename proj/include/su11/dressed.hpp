#pragma once

#include <vector>

#include "su11/radial.hpp"

namespace su11 {

enum class DressedGenerator { TPlus, TZero, TMinus, LPlus, LMinus, R };
enum class LadderSign { Plus, Minus };

/// Finite generator combination c+ T+ + c0 T0 + c- T- + c_id, closed under
/// conjugation by exp(s T-).
struct GeneratorCombo {
  GaussScalar c_plus;
  GaussScalar c_zero;
  GaussScalar c_minus;
  GaussScalar c_id;

  RadialVector apply(const RadialVector& v) const;

  GeneratorCombo operator+(const GeneratorCombo& o) const;
  GeneratorCombo operator-(const GeneratorCombo& o) const;
  GeneratorCombo scaled(const GaussScalar& f) const;
};

/// exp(-s T-) G exp(s T-) as an exact finite combination:
///   T+ -> T+ - 2 s T0 + s^2 T-,   T0 -> T0 - s T-,   T- -> T-;
/// L+- = (T+/omega + omega T-)/2 +- T0 and R = (-T+/omega + omega T-)/2
/// are assembled linearly. omega must be positive for L+- and R.
GeneratorCombo dressed_generator(DressedGenerator g, const GaussScalar& s,
                                 const Rational& omega);

struct DressedSpec {
  GaussScalar s;
  int truncation_K = 0;
};

struct VacuumOutcome {
  DressedSpec spec;
  VerificationReport report;
};

/// Scans the dressing sign s in {+omega, -omega} for the one whose dressed
/// lowering operator annihilates the lowest-weight vector, then verifies
/// the R eigenvalue -mu on the vacuum. Reports the printed sign against
/// the selected one.
VacuumOutcome build_r_vacuum(const Weights& w, const Rational& omega);

/// State L_n^{alpha}(2 omega T-) P with alpha = -2 mu - 1, as an exact
/// finite ladder vector.
RadialVector laguerre_state(int n, const Rational& mu, const Rational& omega);

/// Dressed R applied to the Laguerre state must reproduce it with the
/// exact eigenvalue n - mu.
VerificationReport laguerre_eigenstate_check(int n, const Weights& w, const Rational& omega);

/// Ladder family (dressed L+)^n P: eigenvalue n - mu, exact scalar
/// proportionality to the Laguerre state, and the so(2,1) brackets of
/// {R, L+, L-} on F_a for a <= n+2.
VerificationReport ladder_states_check(int n, const Weights& w, const Rational& omega);

/// Residual of [L0, f(L+-)] -+ L+- f'(L+-) on F_a for a = 0..K, with f a
/// polynomial given by ascending coefficients and L0 the dressed R.
VerificationReport check_f_commutator_l(const std::vector<GaussScalar>& f_coeffs,
                                        LadderSign sign, const Weights& w,
                                        const Rational& omega, int K);

}  // namespace su11
