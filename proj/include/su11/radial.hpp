#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "su11/gauss.hpp"
#include "su11/report.hpp"

namespace su11 {

/// Scalar that the quadratic Casimir takes on a lowest-weight module of
/// weight mu: -mu(mu+1).
Rational casimir_value(const Rational& mu);

/// Weight data of one module: the lowest weight, its Casimir scalar, and
/// the two resolvent-root candidates r(r+1) = -casimir, i.e.
/// r = (-1 +- sqrt(1 - 4 casimir))/2 = {mu, -1-mu}.
struct Weights {
  Rational mu;
  Rational casimir;
  std::pair<Rational, Rational> mu_c_candidates;  // (minus-root, plus-root)
  std::optional<Rational> mu_c_selected;

  static Weights from_mu(const Rational& mu);

  const Rational& minus_root() const { return mu_c_candidates.first; }
  const Rational& plus_root() const { return mu_c_candidates.second; }
  const Rational& selected() const;
};

/// Finitely supported vector on the exponent ladder {beta + j : j >= 0}
/// over a lowest weight mu; entry j is the coefficient of the j-th ladder
/// state F_{beta+j}.
class RadialVector {
 public:
  RadialVector(Rational weight, Rational beta)
      : weight_(std::move(weight)), beta_(std::move(beta)) {}

  static RadialVector unit(const Rational& weight, const Rational& beta, int j,
                           const GaussScalar& c = GaussScalar(1));

  const Rational& weight() const { return weight_; }
  const Rational& beta() const { return beta_; }
  const std::map<int, GaussScalar>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  GaussScalar coeff(int j) const;
  void add(int j, const GaussScalar& c);

  RadialVector operator+(const RadialVector& o) const;
  RadialVector operator-(const RadialVector& o) const;
  RadialVector scaled(const GaussScalar& c) const;

  friend bool operator==(const RadialVector& a, const RadialVector& b) {
    return a.weight_ == b.weight_ && a.beta_ == b.beta_ && a.coeffs_ == b.coeffs_;
  }

  /// Drops all components with ladder index above j_max.
  RadialVector truncated(int j_max) const;

  std::string str() const;
  nlohmann::ordered_json to_json() const;

 private:
  void check_compatible(const RadialVector& o) const;

  Rational weight_;
  Rational beta_;
  std::map<int, GaussScalar> coeffs_;
};

enum class Generator { TPlus, TZero, TMinus };

/// Exact generator action on the ladder: with a = beta + j,
///   T- F_a = F_{a+1},  T0 F_a = (mu - a) F_a,  T+ F_a = a(a-1-2mu) F_{a-1}.
RadialVector radial_apply(Generator g, const RadialVector& v);

/// F_a -> -1/(mu - a + mu_c) F_{a+1} (resolvent first, then T-).
/// Throws ResolventPole naming the offending exponent.
RadialVector apply_time_operator(const RadialVector& v, const Rational& mu_c);
RadialVector apply_time_operator(const RadialVector& v, const Weights& w);

/// Residuals of [T+, i T^] - i on F_a for a = 0..K with the given root.
VerificationReport check_canonical_commutator_with_root(const Rational& mu, int K,
                                                        const Rational& root);
VerificationReport check_canonical_commutator(const Weights& w, int K);

struct ResolveOutcome {
  Weights weights;
  VerificationReport report;
};

/// Scans both Casimir roots against the canonical commutator on
/// F_0..F_K and selects the unique consistent one. Records both
/// candidates, the printed (plus-root) choice, and the selection.
ResolveOutcome resolve_mu_c(const Weights& w, int K);

struct CoherentOutcome {
  RadialVector state;
  VerificationReport report;
};

/// Truncated exponential-of-time-operator state
///   sum_{k<=K} E^k / (k! (nu+1)_k) F_k,  nu = -2 mu - 1,
/// with the eigen-residual (T+ - E) checked through order K-1 and the
/// coefficient ratios cross-checked against the Bessel-series law.
CoherentOutcome coherent_state(const GaussScalar& energy, const Weights& w, int K);

/// Both orderings of T-^n against the shifted resolvent applied to v;
/// the residual must vanish identically.
VerificationReport check_shift_identity(int n, const Rational& mu_param,
                                        const RadialVector& v);

/// Time-eigenstate candidate on the offset ladder beta = 2 mu + 1:
/// verifies the new lowest-weight properties exactly and quantifies the
/// residual of (i T^ - t), which concentrates on the ladder base.
VerificationReport time_eigenstate_residual(const Rational& t, const Weights& w, int K);

}  // namespace su11
