#include "su11/calogero.hpp"

namespace su11 {

namespace {

void require_invariant_domain(const MultiPoly& p) {
  if (!p.is_symmetric())
    fail(ErrorKind::NonSymmetricInput, "generator domain requires a symmetric polynomial");
  if (!p.is_translation_invariant())
    fail(ErrorKind::NotTranslationInvariant,
         "generator domain requires a translation-invariant polynomial");
}

}  // namespace

SystemParams SystemParams::make(int n_particles, const Rational& lambda,
                                std::optional<Rational> omega) {
  if (n_particles < 2) fail(ErrorKind::ConfigError, "need at least two particles");
  if (omega.has_value() && omega->sign() <= 0)
    fail(ErrorKind::ConfigError, "omega must be positive");
  SystemParams p;
  p.n_particles = n_particles;
  p.lambda = lambda;
  long n = n_particles;
  p.e0 = lambda * Rational(n * (n - 1), 2) + Rational(n, 2);
  p.omega = std::move(omega);
  return p;
}

Rational SystemParams::mu_of(int degree) const {
  return -(Rational(degree) + e0 - Rational(1, 2)) / Rational(2);
}

MultiPoly apply_t_plus(const MultiPoly& p, const SystemParams& params) {
  require_invariant_domain(p);
  const int n = p.n_vars();
  MultiPoly kinetic(n);
  for (int i = 1; i <= n; ++i) kinetic = kinetic + p.derivative(i).derivative(i);

  // Each unordered pair appears twice in the ordered sum with equal value,
  // so the lambda/2 prefactor becomes lambda on the i < j sum.
  MultiPoly interaction(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      MultiPoly d = p.derivative(i) - p.derivative(j);
      if (d.is_zero()) continue;
      interaction = interaction + d.divide_by_difference(i, j);
    }
  }
  return kinetic.scaled(GaussScalar(Rational(1, 2))) +
         interaction.scaled(GaussScalar(params.lambda));
}

MultiPoly apply_t_zero(const MultiPoly& p, const SystemParams& params) {
  require_invariant_domain(p);
  const Rational shift = params.e0 - Rational(1, 2);
  MultiPoly out(p.n_vars());
  for (const auto& [e, c] : p.terms()) {
    long deg = 0;
    for (unsigned a : e) deg += a;
    Rational factor = -(Rational(deg) + shift) / Rational(2);
    out.add_term(e, c * GaussScalar(factor));
  }
  return out;
}

MultiPoly apply_t_minus(const MultiPoly& p, const SystemParams& params) {
  require_invariant_domain(p);
  (void)params;
  MultiPoly half_r2 = shifted_power_sum(p.n_vars(), 2).scaled(GaussScalar(Rational(1, 2)));
  return half_r2 * p;
}

MultiPoly apply_casimir(const MultiPoly& p, const SystemParams& params) {
  MultiPoly tz = apply_t_zero(p, params);
  return apply_t_plus(apply_t_minus(p, params), params) - apply_t_zero(tz, params) + tz;
}

VerificationReport check_su11_commutators(const std::vector<MultiPoly>& basis,
                                          const SystemParams& params) {
  VerificationReport rep;
  rep.check = "su11-brackets";
  int checked = 0;
  for (size_t b = 0; b < basis.size(); ++b) {
    const MultiPoly& p = basis[b];
    std::string where = "basis[" + std::to_string(b) + "]";

    MultiPoly r1 = apply_t_plus(apply_t_minus(p, params), params) -
                   apply_t_minus(apply_t_plus(p, params), params) +
                   apply_t_zero(p, params).scaled(GaussScalar(2));
    rep.require_zero(where + " [T+,T-]+2T0", r1.is_zero(), r1.str());

    MultiPoly tp = apply_t_plus(p, params);
    MultiPoly r2 = apply_t_zero(tp, params) - apply_t_plus(apply_t_zero(p, params), params) - tp;
    rep.require_zero(where + " [T0,T+]-T+", r2.is_zero(), r2.str());

    MultiPoly tm = apply_t_minus(p, params);
    MultiPoly r3 = apply_t_zero(tm, params) - apply_t_minus(apply_t_zero(p, params), params) + tm;
    rep.require_zero(where + " [T0,T-]+T-", r3.is_zero(), r3.str());
    checked += 3;
  }
  rep.notes = std::to_string(checked) + " bracket residuals computed exactly";
  return rep;
}

namespace {

// f(T-) p = sum_j c_j (r^2/2)^j p for the multiplication operator T-.
MultiPoly poly_in_t_minus(const std::vector<GaussScalar>& coeffs, const MultiPoly& p,
                          const SystemParams& params) {
  MultiPoly half_r2 = shifted_power_sum(p.n_vars(), 2).scaled(GaussScalar(Rational(1, 2)));
  MultiPoly acc(p.n_vars());
  MultiPoly power = p;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (j > 0) power = half_r2 * power;
    acc = acc + power.scaled(coeffs[j]);
  }
  return acc;
}

std::vector<GaussScalar> poly_derivative(const std::vector<GaussScalar>& coeffs) {
  std::vector<GaussScalar> d;
  for (size_t j = 1; j < coeffs.size(); ++j)
    d.push_back(coeffs[j] * GaussScalar(Rational(static_cast<long>(j))));
  return d;
}

}  // namespace

VerificationReport check_commutator_formula(const std::vector<GaussScalar>& f_coeffs,
                                            const MultiPoly& p, const SystemParams& params) {
  VerificationReport rep;
  rep.check = "derivation-formula";
  require_invariant_domain(p);

  std::vector<GaussScalar> f1 = poly_derivative(f_coeffs);
  std::vector<GaussScalar> f2 = poly_derivative(f1);

  MultiPoly lhs =
      apply_t_plus(poly_in_t_minus(f_coeffs, p, params), params) -
      poly_in_t_minus(f_coeffs, apply_t_plus(p, params), params);
  MultiPoly rhs =
      apply_t_minus(poly_in_t_minus(f2, p, params), params) -
      poly_in_t_minus(f1, apply_t_zero(p, params), params).scaled(GaussScalar(2));
  MultiPoly residual = lhs - rhs;
  rep.require_zero("[T+,f(T-)] - T- f''(T-) + 2 f'(T-) T0", residual.is_zero(), residual.str());
  return rep;
}

VerificationReport jastrow_conjugation_check(const MultiPoly& p,
                                             const std::vector<Rational>& point,
                                             const SystemParams& params) {
  VerificationReport rep;
  rep.check = "jastrow-conjugation";
  const int n = p.n_vars();
  if (static_cast<int>(point.size()) != n)
    fail(ErrorKind::DimensionMismatch, "point length mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (point[i] == point[j])
        fail(ErrorKind::CoincidentCoordinates,
             "coordinates " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                 " coincide");
  require_invariant_domain(p);

  const Rational& lam = params.lambda;

  // Left side: V^-lambda (1/2 sum d_i^2 - g/2 sum_{i!=j} (x_i-x_j)^-2) V^lambda p
  // expanded via L_i = d_i log V = sum_{j != i} 1/(x_i - x_j). Every V power
  // cancels, leaving rational quantities only.
  GaussScalar lhs(0);
  Rational sum_L2(0), sum_Lp(0), inv_sq_sum(0);
  for (int i = 0; i < n; ++i) {
    Rational li(0), lpi(0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational diff = point[i] - point[j];
      Rational inv = Rational(1) / diff;
      li += inv;
      lpi -= inv * inv;
      inv_sq_sum += inv * inv;
    }
    sum_L2 += li * li;
    sum_Lp += lpi;
    GaussScalar d1 = p.derivative(i + 1).eval_rational(point);
    GaussScalar d2 = p.derivative(i + 1).derivative(i + 1).eval_rational(point);
    lhs += d2 * GaussScalar(Rational(1, 2)) + d1 * GaussScalar(lam * li);
  }
  Rational scalar_part = (lam * lam * sum_L2 + lam * sum_Lp) / Rational(2) -
                         lam * (lam - Rational(1)) / Rational(2) * inv_sq_sum;
  lhs += p.eval_rational(point) * GaussScalar(scalar_part);

  GaussScalar rhs = apply_t_plus(p, params).eval_rational(point);

  GaussScalar residual = lhs - rhs;
  rep.require_zero("conjugated-hamiltonian vs generator", residual.is_zero(), residual.str());
  rep.evidence("value", rhs.str());
  return rep;
}

}  // namespace su11
