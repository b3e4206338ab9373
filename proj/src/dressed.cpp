#include "su11/dressed.hpp"

namespace su11 {

RadialVector GeneratorCombo::apply(const RadialVector& v) const {
  RadialVector out(v.weight(), v.beta());
  if (!c_plus.is_zero()) out = out + radial_apply(Generator::TPlus, v).scaled(c_plus);
  if (!c_zero.is_zero()) out = out + radial_apply(Generator::TZero, v).scaled(c_zero);
  if (!c_minus.is_zero()) out = out + radial_apply(Generator::TMinus, v).scaled(c_minus);
  if (!c_id.is_zero()) out = out + v.scaled(c_id);
  return out;
}

GeneratorCombo GeneratorCombo::operator+(const GeneratorCombo& o) const {
  return {c_plus + o.c_plus, c_zero + o.c_zero, c_minus + o.c_minus, c_id + o.c_id};
}

GeneratorCombo GeneratorCombo::operator-(const GeneratorCombo& o) const {
  return {c_plus - o.c_plus, c_zero - o.c_zero, c_minus - o.c_minus, c_id - o.c_id};
}

GeneratorCombo GeneratorCombo::scaled(const GaussScalar& f) const {
  return {c_plus * f, c_zero * f, c_minus * f, c_id * f};
}

GeneratorCombo dressed_generator(DressedGenerator g, const GaussScalar& s,
                                 const Rational& omega) {
  const GaussScalar zero(0), one(1);
  GeneratorCombo t_plus{one, GaussScalar(-2) * s, s * s, zero};
  GeneratorCombo t_zero{zero, one, -s, zero};
  GeneratorCombo t_minus{zero, zero, one, zero};

  switch (g) {
    case DressedGenerator::TPlus: return t_plus;
    case DressedGenerator::TZero: return t_zero;
    case DressedGenerator::TMinus: return t_minus;
    default: break;
  }
  if (omega.sign() <= 0)
    fail(ErrorKind::ConfigError, "omega must be positive for the compact sector");
  GaussScalar inv_2w{Rational(1) / (Rational(2) * omega)};
  GaussScalar half_w{omega / Rational(2)};
  GeneratorCombo compact = t_plus.scaled(inv_2w) + t_minus.scaled(half_w);
  switch (g) {
    case DressedGenerator::LPlus: return compact + t_zero;
    case DressedGenerator::LMinus: return compact - t_zero;
    case DressedGenerator::R:
      return t_minus.scaled(half_w) - t_plus.scaled(inv_2w);
    default:
      fail(ErrorKind::Internal, "unreachable dressed generator");
  }
}

VacuumOutcome build_r_vacuum(const Weights& w, const Rational& omega) {
  if (omega.sign() <= 0) fail(ErrorKind::ConfigError, "omega must be positive");
  VerificationReport rep;
  rep.check = "r-vacuum";
  rep.param("mu", w.mu.str());
  rep.param("omega", omega.str());

  RadialVector p = RadialVector::unit(w.mu, Rational(0), 0);
  const GaussScalar s_plus{omega}, s_minus{-omega};

  RadialVector res_plus = dressed_generator(DressedGenerator::LMinus, s_plus, omega).apply(p);
  RadialVector res_minus = dressed_generator(DressedGenerator::LMinus, s_minus, omega).apply(p);

  bool plus_ok = res_plus.is_zero();
  bool minus_ok = res_minus.is_zero();
  if (!plus_ok && !minus_ok)
    fail(ErrorKind::NoAnnihilatedVacuum, "no dressing sign annihilates the vacuum");

  GaussScalar selected = minus_ok ? s_minus : s_plus;
  const RadialVector& rejected_residual = minus_ok ? res_plus : res_minus;
  rep.evidence("rejected sign " + (minus_ok ? s_plus : s_minus).str() + " leaves L- |0>",
               rejected_residual.str());

  GeneratorCombo r_op = dressed_generator(DressedGenerator::R, selected, omega);
  RadialVector r_res = r_op.apply(p) - p.scaled(GaussScalar(-w.mu));
  rep.require_zero("L0 |0> = -mu |0>", r_res.is_zero(), r_res.str());
  rep.evidence("L0 vacuum eigenvalue", (-w.mu).str());

  rep.conventions.push_back({"vacuum dressing sign", "exp(+omega T-)",
                             "exp(" + selected.str() + " T-)",
                             "dressed lowering operator annihilates the vacuum"});
  return {DressedSpec{selected, 0}, rep};
}

namespace {

// Generalized binomial C(x, r) = x(x-1)...(x-r+1)/r! for rational x.
Rational binom_rational(const Rational& x, int r) {
  Rational acc(1);
  for (int t = 0; t < r; ++t) acc *= (x - Rational(t)) / Rational(t + 1);
  return acc;
}

GaussScalar resolved_dressing_sign(const Weights& w, const Rational& omega) {
  return build_r_vacuum(w, omega).spec.s;
}

}  // namespace

RadialVector laguerre_state(int n, const Rational& mu, const Rational& omega) {
  if (n < 0) fail(ErrorKind::InvalidDegree, "Laguerre index must be >= 0");
  const Rational alpha = Rational(-2) * mu - Rational(1);
  RadialVector v(mu, Rational(0));
  Rational z_power(1);  // (2 omega)^k
  Rational k_factorial(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      z_power *= Rational(2) * omega;
      k_factorial *= Rational(k);
    }
    Rational c = binom_rational(Rational(n) + alpha, n - k) * z_power / k_factorial;
    if (k % 2 == 1) c = -c;
    v.add(k, GaussScalar(c));
  }
  return v;
}

VerificationReport laguerre_eigenstate_check(int n, const Weights& w, const Rational& omega) {
  VerificationReport rep;
  rep.check = "laguerre-eigenstate";
  rep.param("n", std::to_string(n));
  rep.param("mu", w.mu.str());
  rep.param("omega", omega.str());

  GaussScalar s = resolved_dressing_sign(w, omega);
  GeneratorCombo r_op = dressed_generator(DressedGenerator::R, s, omega);
  RadialVector state = laguerre_state(n, w.mu, omega);
  Rational eigenvalue = Rational(n) - w.mu;
  RadialVector residual = r_op.apply(state) - state.scaled(GaussScalar(eigenvalue));
  rep.require_zero("L0 Laguerre-state eigenvalue n - mu", residual.is_zero(), residual.str());
  rep.evidence("eigenvalue", eigenvalue.str());
  return rep;
}

VerificationReport ladder_states_check(int n, const Weights& w, const Rational& omega) {
  VerificationReport rep;
  rep.check = "ladder-states";
  rep.param("n", std::to_string(n));
  rep.param("mu", w.mu.str());
  rep.param("omega", omega.str());

  GaussScalar s = resolved_dressing_sign(w, omega);
  GeneratorCombo l_plus = dressed_generator(DressedGenerator::LPlus, s, omega);
  GeneratorCombo l_minus = dressed_generator(DressedGenerator::LMinus, s, omega);
  GeneratorCombo r_op = dressed_generator(DressedGenerator::R, s, omega);

  RadialVector v = RadialVector::unit(w.mu, Rational(0), 0);
  for (int k = 0; k < n; ++k) v = l_plus.apply(v);
  if (v.is_zero()) {
    rep.violation("ladder state (L+)^n |0>", "0");
    return rep;
  }

  Rational eigenvalue = Rational(n) - w.mu;
  RadialVector eig_res = r_op.apply(v) - v.scaled(GaussScalar(eigenvalue));
  rep.require_zero("L0 ladder-state eigenvalue n - mu", eig_res.is_zero(), eig_res.str());
  rep.evidence("eigenvalue", eigenvalue.str());

  // Exact proportionality to the Laguerre family.
  RadialVector lag = laguerre_state(n, w.mu, omega);
  GaussScalar ratio(0);
  for (const auto& [j, c] : lag.coeffs()) {
    if (!c.is_zero()) {
      ratio = v.coeff(j) / c;
      break;
    }
  }
  RadialVector prop_res = v - lag.scaled(ratio);
  rep.require_zero("ladder state proportional to Laguerre state", prop_res.is_zero(),
                   prop_res.str());
  rep.evidence("ratio ladder/laguerre", ratio.str());

  // so(2,1) brackets of the dressed family, checked on F_a.
  for (int a = 0; a <= n + 2; ++a) {
    RadialVector f = RadialVector::unit(w.mu, Rational(0), a);
    std::string at = " on F_" + std::to_string(a);
    RadialVector r1 = r_op.apply(l_plus.apply(f)) - l_plus.apply(r_op.apply(f)) -
                      l_plus.apply(f);
    rep.require_zero("[R,L+]-L+" + at, r1.is_zero(), r1.str());
    RadialVector r2 = r_op.apply(l_minus.apply(f)) - l_minus.apply(r_op.apply(f)) +
                      l_minus.apply(f);
    rep.require_zero("[R,L-]+L-" + at, r2.is_zero(), r2.str());
    RadialVector r3 = l_plus.apply(l_minus.apply(f)) - l_minus.apply(l_plus.apply(f)) +
                      r_op.apply(f).scaled(GaussScalar(2));
    rep.require_zero("[L+,L-]+2R" + at, r3.is_zero(), r3.str());
  }
  return rep;
}

VerificationReport check_f_commutator_l(const std::vector<GaussScalar>& f_coeffs,
                                        LadderSign sign, const Weights& w,
                                        const Rational& omega, int K) {
  VerificationReport rep;
  rep.check = "ladder-derivation-rule";
  rep.param("mu", w.mu.str());
  rep.param("omega", omega.str());
  rep.param("sign", sign == LadderSign::Plus ? "+" : "-");
  rep.param("K", std::to_string(K));

  GaussScalar s = resolved_dressing_sign(w, omega);
  GeneratorCombo ladder = dressed_generator(
      sign == LadderSign::Plus ? DressedGenerator::LPlus : DressedGenerator::LMinus, s, omega);
  GeneratorCombo l_zero = dressed_generator(DressedGenerator::R, s, omega);

  auto poly_apply = [&](const std::vector<GaussScalar>& coeffs, const RadialVector& u) {
    RadialVector acc(u.weight(), u.beta());
    RadialVector power = u;
    for (size_t j = 0; j < coeffs.size(); ++j) {
      if (j > 0) power = ladder.apply(power);
      acc = acc + power.scaled(coeffs[j]);
    }
    return acc;
  };
  std::vector<GaussScalar> f1;
  for (size_t j = 1; j < f_coeffs.size(); ++j)
    f1.push_back(f_coeffs[j] * GaussScalar(Rational(static_cast<long>(j))));

  const GaussScalar orientation =
      sign == LadderSign::Plus ? GaussScalar(1) : GaussScalar(-1);
  for (int a = 0; a <= K; ++a) {
    RadialVector f = RadialVector::unit(w.mu, Rational(0), a);
    RadialVector lhs = l_zero.apply(poly_apply(f_coeffs, f)) -
                       poly_apply(f_coeffs, l_zero.apply(f));
    RadialVector rhs = ladder.apply(poly_apply(f1, f)).scaled(orientation);
    RadialVector residual = lhs - rhs;
    rep.require_zero("[L0,f(L)] -+ L f'(L) on F_" + std::to_string(a), residual.is_zero(),
                     residual.str());
  }
  return rep;
}

}  // namespace su11
