#include <doctest.h>

#include "helpers.hpp"
#include "su11/kernel.hpp"
#include "su11/radial.hpp"
#include "su11/rng.hpp"

using namespace su11;
using su11::testing::realize;

namespace {

const Rational kMu(-5, 4);

RadialVector unit(const Rational& mu, int j) {
  return RadialVector::unit(mu, Rational(0), j);
}

Weights resolved(const Rational& mu, int K = 16) {
  return resolve_mu_c(Weights::from_mu(mu), K).weights;
}

}  // namespace

TEST_CASE("single-ladder generator rules") {
  // T+ F_1 = -2 mu F_0.
  RadialVector f1 = unit(kMu, 1);
  CHECK(radial_apply(Generator::TPlus, f1) ==
        unit(kMu, 0).scaled(GaussScalar(Rational(5, 2))));

  // T0 F_0 = mu F_0.
  CHECK(radial_apply(Generator::TZero, unit(kMu, 0)) ==
        unit(kMu, 0).scaled(GaussScalar(kMu)));

  // The offset ladder base beta = 2 mu + 1 is annihilated by T+.
  Rational beta = Rational(2) * kMu + Rational(1);
  RadialVector q = RadialVector::unit(kMu, beta, 0);
  CHECK(radial_apply(Generator::TPlus, q).is_zero());

  CHECK(radial_apply(Generator::TMinus, unit(kMu, 2)) == unit(kMu, 3));
}

TEST_CASE("casimir scalar") {
  CHECK(casimir_value(Rational(-5, 4)) == Rational(-5, 16));
  CHECK(casimir_value(Rational(0)) == Rational(0));
  CHECK(casimir_value(Rational(-1)) == Rational(0));
  // Weight reflection symmetry mu <-> -1-mu.
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    Rational mu = rng.rational(9, 5);
    CHECK(casimir_value(mu) == casimir_value(Rational(-1) - mu));
  }
}

TEST_CASE("module brackets and casimir constancy on both ladders") {
  Rng rng(73);
  for (int trial = 0; trial < 8; ++trial) {
    Rational mu = -rng.positive_rational(9, 4);
    Rational casimir = casimir_value(mu);
    for (Rational beta : {Rational(0), Rational(2) * mu + Rational(1)}) {
      for (int j = 0; j <= 6; ++j) {
        RadialVector f = RadialVector::unit(mu, beta, j);
        RadialVector r1 =
            radial_apply(Generator::TPlus, radial_apply(Generator::TMinus, f)) -
            radial_apply(Generator::TMinus, radial_apply(Generator::TPlus, f)) +
            radial_apply(Generator::TZero, f).scaled(GaussScalar(2));
        CHECK(r1.is_zero());
        RadialVector r2 =
            radial_apply(Generator::TZero, radial_apply(Generator::TPlus, f)) -
            radial_apply(Generator::TPlus, radial_apply(Generator::TZero, f)) -
            radial_apply(Generator::TPlus, f);
        CHECK(r2.is_zero());
        RadialVector r3 =
            radial_apply(Generator::TZero, radial_apply(Generator::TMinus, f)) -
            radial_apply(Generator::TMinus, radial_apply(Generator::TZero, f)) +
            radial_apply(Generator::TMinus, f);
        CHECK(r3.is_zero());

        if (beta.is_zero()) {
          RadialVector cas =
              radial_apply(Generator::TPlus, radial_apply(Generator::TMinus, f)) -
              radial_apply(Generator::TZero, radial_apply(Generator::TZero, f)) +
              radial_apply(Generator::TZero, f);
          CHECK(cas == f.scaled(GaussScalar(casimir)));
        }
      }
    }
  }
}

TEST_CASE("casimir root resolution") {
  ResolveOutcome out = resolve_mu_c(Weights::from_mu(kMu), 20);
  CHECK(out.weights.mu_c_candidates.first == Rational(-5, 4));
  CHECK(out.weights.mu_c_candidates.second == Rational(1, 4));
  CHECK(out.weights.selected() == Rational(-5, 4));
  CHECK(out.report.passed());
  REQUIRE(out.report.conventions.size() == 1);
  CHECK(out.report.conventions[0].nominal == "plus root 1/4");
  CHECK(out.report.conventions[0].selected == "-5/4");

  // Degenerate weight: double root at -1/2.
  ResolveOutcome dbl = resolve_mu_c(Weights::from_mu(Rational(-1, 2)), 20);
  CHECK(dbl.weights.selected() == Rational(-1, 2));

  CHECK(resolved(Rational(-9, 4), 20).selected() == Rational(-9, 4));
}

TEST_CASE("root resolution fails cleanly outside the lowest-weight regime") {
  // mu = 0: the mu-root hits a resolvent pole at the ladder base and the
  // -1-mu root violates the commutator there, so no candidate survives.
  CHECK_THROWS_AS(resolve_mu_c(Weights::from_mu(Rational(0)), 8), Error);
  try {
    resolve_mu_c(Weights::from_mu(Rational(0)), 8);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConsistentRoot);
  }
  // mu = 1/2: the mu-root poles at a = 1, the other root fails at a = 0.
  CHECK_THROWS_AS(resolve_mu_c(Weights::from_mu(Rational(1, 2)), 8), Error);
}

TEST_CASE("time operator action") {
  Weights w = resolved(kMu);
  // T^ F_a = F_{a+1} / (a - 2 mu) with the selected root.
  for (int a = 0; a <= 6; ++a) {
    RadialVector got = apply_time_operator(unit(kMu, a), w);
    Rational coef = Rational(1) / (Rational(a) - Rational(2) * kMu);
    CHECK(got == unit(kMu, a + 1).scaled(GaussScalar(coef)));
  }
  CHECK(apply_time_operator(unit(kMu, 0), w) ==
        unit(kMu, 1).scaled(GaussScalar(Rational(2, 5))));

  // With the rejected root the denominators collapse to a + 1.
  Rational rejected = Rational(1, 4);
  for (int a = 0; a <= 6; ++a) {
    RadialVector got = apply_time_operator(unit(kMu, a), rejected);
    CHECK(got == unit(kMu, a + 1).scaled(GaussScalar(Rational(1, a + 1))));
  }
}

TEST_CASE("canonical commutator holds only for the selected root") {
  Weights w = resolved(kMu, 20);
  CHECK(check_canonical_commutator(w, 20).passed());

  VerificationReport bad = check_canonical_commutator_with_root(kMu, 20, Rational(1, 4));
  CHECK_FALSE(bad.passed());
  // The base residual is i(-2 mu - 1) F_0 = (3/2) i F_0.
  REQUIRE_FALSE(bad.residuals.empty());
  CHECK(bad.residuals[0].location == "a=0");
  CHECK(bad.residuals[0].value == "(3/2*i)*F[0]");

  CHECK(check_canonical_commutator(resolved(Rational(-1, 2), 20), 20).passed());

  Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    Rational mu = -rng.positive_rational(9, 4);
    Weights wt = resolved(mu, 20);
    CHECK(check_canonical_commutator(wt, 20).passed());
    if (mu != Rational(-1, 2)) {
      Rational other =
          wt.selected() == wt.plus_root() ? wt.minus_root() : wt.plus_root();
      VerificationReport rej = check_canonical_commutator_with_root(mu, 20, other);
      CHECK_FALSE(rej.passed());
      GaussScalar expected = GaussScalar::i() * GaussScalar(Rational(-2) * mu - Rational(1));
      CHECK(rej.residuals[0].value ==
            unit(mu, 0).scaled(expected).str());
    }
  }
}

TEST_CASE("coherent states are exact eigenstates through the truncation") {
  Weights w = resolved(kMu);
  GaussScalar e(Rational(1, 3), Rational(1, 2));
  CoherentOutcome out = coherent_state(e, w, 16);
  CHECK(out.report.passed());
  CHECK(out.report.exact_through_order == 15);

  // nu = 3/2: first ratio c_1/c_0 = E/(1*(1+nu)) = (2/5) E.
  CHECK(out.state.coeff(1) == e * GaussScalar(Rational(2, 5)));

  // E = 0 collapses to the lowest-weight vector.
  CoherentOutcome trivial = coherent_state(GaussScalar(0), w, 16);
  CHECK(trivial.state == unit(kMu, 0));
  CHECK(trivial.report.passed());

  CHECK_THROWS_AS(coherent_state(e, w, 1), Error);
  try {
    coherent_state(e, w, 1);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::TruncationTooSmall);
  }

  // d/dE acts like the time operator, order by order: for the coefficient
  // functions c_k(E) = E^k/(k!(nu+1)_k), k c_k / E equals the T^ transport
  // of c_{k-1}.
  Rng rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    Rational mu = -rng.positive_rational(9, 4);
    Weights wt = resolved(mu);
    GaussScalar energy = rng.gauss(6, 4);
    if (energy.is_zero()) energy = GaussScalar(1);
    CoherentOutcome c = coherent_state(energy, wt, 12);
    CHECK(c.report.passed());
    RadialVector transported = apply_time_operator(c.state, wt);
    for (int k = 1; k <= 12; ++k) {
      GaussScalar derivative_coeff =
          c.state.coeff(k) * GaussScalar(Rational(k)) / energy;
      CHECK(derivative_coeff == transported.coeff(k));
    }
  }
}

TEST_CASE("resolvent shift identity") {
  // n=1, shift parameter 0, weight -5/4: both sides (4/9) F_1.
  VerificationReport rep = check_shift_identity(1, Rational(0), unit(kMu, 0));
  CHECK(rep.passed());

  CHECK(check_shift_identity(0, Rational(1, 3), unit(kMu, 2)).passed());

  Rng rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    Rational mu_param = rng.rational(6, 4);
    Rational weight = -rng.positive_rational(9, 4);
    RadialVector v = unit(weight, 0) + unit(weight, 2).scaled(GaussScalar(2));
    try {
      CHECK(check_shift_identity(3, mu_param, v).passed());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ResolventPole);
    }
  }

  // A direct pole: weight -5/4, a = 0, resolvent -(mu_w) - mu + n = 0.
  CHECK_THROWS_AS(check_shift_identity(0, Rational(5, 4), unit(kMu, 0)), Error);
}

TEST_CASE("time eigenstates live on the offset ladder with a base defect") {
  Weights w = resolved(kMu);
  VerificationReport rep = time_eigenstate_residual(Rational(1), w, 12);
  CHECK(rep.passed());
  CHECK(rep.exact_through_order == 12);
  bool found_defect = false;
  for (const auto& row : rep.residuals) {
    if (row.kind == "defect") {
      found_defect = true;
      CHECK(row.value == "-1");  // -t with t = 1
    }
  }
  CHECK(found_defect);

  Rng rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    Rational mu = -rng.positive_rational(9, 4);
    Rational t = rng.nonzero_rational(7, 4);
    VerificationReport r = time_eigenstate_residual(t, resolved(mu), 12);
    CHECK(r.passed());
    for (const auto& row : r.residuals)
      if (row.kind == "defect") CHECK(row.value == (-t).str());
  }

  CHECK_THROWS_AS(time_eigenstate_residual(Rational(0), w, 12), Error);
}

TEST_CASE("radial predictions match the concrete realization") {
  // T- P0 followed by T+ reproduces -2 mu_0 P0 = (5/2) P0 at N=2, lambda=2.
  SystemParams params = SystemParams::make(2, Rational(2));
  MultiPoly p0 = MultiPoly::constant(2, GaussScalar(1));
  MultiPoly concrete = apply_t_plus(apply_t_minus(p0, params), params);
  RadialVector predicted = radial_apply(Generator::TPlus, unit(params.mu_of(0), 1));
  CHECK(concrete == realize(predicted, p0, params));

  // Words of generators on towers over every kernel vector.
  std::vector<Generator> gens = {Generator::TPlus, Generator::TZero, Generator::TMinus};
  for (int n = 2; n <= 3; ++n) {
    SystemParams sys = SystemParams::make(n, Rational(1, 2));
    for (int m = 0; m <= 6; ++m) {
      KernelBasis kb = zero_energy_states(sys, m);
      for (const auto& p : kb.vectors) {
        for (int k = 0; k <= 2; ++k) {
          MultiPoly tower = p;
          for (int t = 0; t < k; ++t) tower = apply_t_minus(tower, sys);
          for (Generator g1 : gens) {
            for (Generator g2 : gens) {
              RadialVector rv =
                  radial_apply(g2, radial_apply(g1, RadialVector::unit(kb.mu, Rational(0), k)));
              MultiPoly concrete2 = tower;
              concrete2 = (g1 == Generator::TPlus)   ? apply_t_plus(concrete2, sys)
                          : (g1 == Generator::TZero) ? apply_t_zero(concrete2, sys)
                                                     : apply_t_minus(concrete2, sys);
              concrete2 = (g2 == Generator::TPlus)   ? apply_t_plus(concrete2, sys)
                          : (g2 == Generator::TZero) ? apply_t_zero(concrete2, sys)
                                                     : apply_t_minus(concrete2, sys);
              CHECK(concrete2 == realize(rv, p, sys));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("radial vector serialization") {
  RadialVector v = unit(kMu, 0) + unit(kMu, 2).scaled(GaussScalar(Rational(0), Rational(1, 3)));
  auto j = v.to_json();
  CHECK(j["weight"] == "-5/4");
  CHECK(j["beta"] == "0");
  CHECK(j["coeffs"]["0"] == "1");
  CHECK(j["coeffs"]["2"] == "1/3*i");
  CHECK(v.str() == "(1)*F[0] + (1/3*i)*F[2]");
}
