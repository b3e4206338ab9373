#include <doctest.h>

#include "helpers.hpp"
#include "su11/calogero.hpp"
#include "su11/rng.hpp"

using namespace su11;
using su11::testing::distinct_point;
using su11::testing::random_invariant_poly;

namespace {

const SystemParams kN2L2 = SystemParams::make(2, Rational(2));
const SystemParams kN3Half = SystemParams::make(3, Rational(1, 2));

MultiPoly one(int n) { return MultiPoly::constant(n, GaussScalar(1)); }

}  // namespace

TEST_CASE("system constants") {
  CHECK(kN2L2.e0 == Rational(3));
  CHECK(kN2L2.mu_of(0) == Rational(-5, 4));
  CHECK(kN2L2.mu_of(2) == Rational(-9, 4));
  CHECK(kN3Half.e0 == Rational(3));
}

TEST_CASE("T+ annihilates constants and drops degree by two") {
  CHECK(apply_t_plus(one(2), kN2L2).is_zero());

  // N=2, lambda=2 on p_2 = (x1-x2)^2/2: kinetic part (N-1), interaction
  // lambda N (N-1), total (N-1)(1 + lambda N) = 5. The T- chain pins the
  // normalization: T+ T- 1 = -2 mu_0 = 5/2 on exactly half of p_2.
  MultiPoly p2 = shifted_power_sum(2, 2);
  CHECK(apply_t_plus(p2, kN2L2) == one(2).scaled(GaussScalar(5)));
  CHECK(apply_t_plus(apply_t_minus(one(2), kN2L2), kN2L2) ==
        one(2).scaled(GaussScalar(Rational(5, 2))));

  // Degree-3 invariants at N=3 map into the empty degree-1 space.
  CHECK(apply_t_plus(shifted_power_sum(3, 3), kN3Half).is_zero());

  Rng rng(31);
  for (int n = 2; n <= 4; ++n) {
    SystemParams params = SystemParams::make(n, rng.nonzero_rational(7, 5));
    for (int m = 2; m <= 6; ++m) {
      for (const auto& e : invariant_basis(n, m).elements) {
        MultiPoly image = apply_t_plus(e, params);
        if (image.is_zero()) continue;
        CHECK(image.homogeneous_degree() == m - 2);
        CHECK(image.is_symmetric());
        CHECK(image.is_translation_invariant());
      }
    }
  }
}

TEST_CASE("T+ rejects non-invariant input") {
  CHECK_THROWS_AS(apply_t_plus(MultiPoly::variable(2, 1), kN2L2), Error);
  try {
    apply_t_plus(MultiPoly::variable(2, 1), kN2L2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSymmetricInput);
  }
  MultiPoly symmetric_not_invariant = MultiPoly::variable(2, 1) + MultiPoly::variable(2, 2);
  try {
    apply_t_plus(symmetric_not_invariant, kN2L2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTranslationInvariant);
  }
}

TEST_CASE("T0 is the graded weight operator") {
  CHECK(apply_t_zero(one(2), kN2L2) == one(2).scaled(GaussScalar(Rational(-5, 4))));

  MultiPoly p2 = shifted_power_sum(2, 2);
  CHECK(apply_t_zero(p2, kN2L2) == p2.scaled(GaussScalar(Rational(-9, 4))));

  Rng rng(37);
  for (int n = 2; n <= 4; ++n) {
    SystemParams params = SystemParams::make(n, rng.nonzero_rational(9, 5));
    for (int m = 0; m <= 8; ++m) {
      for (const auto& e : invariant_basis(n, m).elements) {
        CHECK(apply_t_zero(e, params) == e.scaled(GaussScalar(params.mu_of(m))));
      }
    }
  }
}

TEST_CASE("T- multiplies by half the centered square sum") {
  MultiPoly u = MultiPoly::variable(2, 1) - MultiPoly::variable(2, 2);
  CHECK(apply_t_minus(one(2), kN2L2) == (u * u).scaled(GaussScalar(Rational(1, 4))));

  std::vector<Rational> point = {Rational(1), Rational(0), Rational(-1)};
  CHECK(apply_t_minus(one(3), kN3Half).eval_rational(point) == GaussScalar(1));

  Rng rng(41);
  MultiPoly p = random_invariant_poly(rng, 3, 4);
  MultiPoly q = random_invariant_poly(rng, 3, 4);
  CHECK(apply_t_minus(p + q, kN3Half) ==
        apply_t_minus(p, kN3Half) + apply_t_minus(q, kN3Half));

  // Grading: degree rises by exactly two.
  for (int m = 0; m <= 8; ++m) {
    for (const auto& e : invariant_basis(3, m).elements) {
      CHECK(apply_t_minus(e, kN3Half).homogeneous_degree() == m + 2);
    }
  }
}

TEST_CASE("casimir takes the lowest-weight scalar on kernel vectors") {
  // Brute-force value at the bottom of the module: T+ T- 1 - T0(T0-1) 1.
  Rational mu0 = kN2L2.mu_of(0);
  MultiPoly c1 = apply_casimir(one(2), kN2L2);
  CHECK(c1 == one(2).scaled(GaussScalar(-(mu0 * (mu0 + Rational(1))))));
  CHECK(c1 == one(2).scaled(GaussScalar(Rational(-5, 16))));

  // P_3 = p_3 at N=3 is annihilated by T+ for every coupling, so the
  // casimir acts by -mu_3(mu_3+1) there.
  SystemParams n3l2 = SystemParams::make(3, Rational(2));
  Rational mu3 = n3l2.mu_of(3);
  CHECK(mu3 == Rational(-5));
  MultiPoly p3 = shifted_power_sum(3, 3);
  CHECK(apply_casimir(p3, n3l2) == p3.scaled(GaussScalar(Rational(-20))));

  Rng rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    MultiPoly p = random_invariant_poly(rng, 3, 4);
    CHECK(apply_casimir(apply_t_minus(p, kN3Half), kN3Half) ==
          apply_t_minus(apply_casimir(p, kN3Half), kN3Half));
  }

  // Constancy down the T- tower over each kernel vector.
  for (int m : {0, 3}) {
    Rational mu = kN3Half.mu_of(m);
    MultiPoly tower = m == 0 ? one(3) : shifted_power_sum(3, 3);
    GaussScalar scalar{-(mu * (mu + Rational(1)))};
    for (int k = 0; k <= 3; ++k) {
      CHECK(apply_casimir(tower, kN3Half) == tower.scaled(scalar));
      tower = apply_t_minus(tower, kN3Half);
    }
  }
}

TEST_CASE("su(1,1) brackets vanish on invariant bases") {
  for (int m = 0; m <= 6; ++m) {
    auto basis = invariant_basis(2, m).elements;
    if (basis.empty()) continue;
    CHECK(check_su11_commutators(basis, kN2L2).passed());
  }
  CHECK(check_su11_commutators(invariant_basis(3, 4).elements, kN3Half).passed());

  // T+ T- 1 = (E0 - 1/2) 1 is the first bracket on the constant.
  MultiPoly lhs = apply_t_plus(apply_t_minus(one(2), kN2L2), kN2L2);
  CHECK(lhs == one(2).scaled(GaussScalar(kN2L2.e0 - Rational(1, 2))));

  Rng rng(47);
  for (int n = 2; n <= 4; ++n) {
    SystemParams params = SystemParams::make(n, rng.nonzero_rational(9, 6));
    for (int m = 0; m <= 5; ++m) {
      auto basis = invariant_basis(n, m).elements;
      if (basis.empty()) continue;
      CHECK(check_su11_commutators(basis, params).passed());
    }
  }
}

TEST_CASE("commutator formula for polynomials in T-") {
  std::vector<GaussScalar> f_linear = {GaussScalar(0), GaussScalar(1)};
  CHECK(check_commutator_formula(f_linear, one(2), kN2L2).passed());

  std::vector<GaussScalar> f_square = {GaussScalar(0), GaussScalar(0), GaussScalar(1)};
  CHECK(check_commutator_formula(f_square, one(2), kN2L2).passed());

  std::vector<GaussScalar> f_cubic = {GaussScalar(0), GaussScalar(Rational(-1, 2)),
                                      GaussScalar(0), GaussScalar(1)};
  CHECK(check_commutator_formula(f_cubic, shifted_power_sum(3, 2), kN3Half).passed());

  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    int deg = static_cast<int>(rng.int_in(1, 4));
    std::vector<GaussScalar> f;
    for (int j = 0; j <= deg; ++j) f.push_back(rng.gauss(5, 4));
    MultiPoly p = random_invariant_poly(rng, 3, 4);
    CHECK(check_commutator_formula(f, p, kN3Half).passed());
  }
}

TEST_CASE("jastrow conjugation at rational points") {
  MultiPoly u = MultiPoly::variable(2, 1) - MultiPoly::variable(2, 2);
  MultiPoly u2 = u * u;
  std::vector<Rational> pt = {Rational(3), Rational(1)};
  VerificationReport rep = jastrow_conjugation_check(u2, pt, kN2L2);
  CHECK(rep.passed());
  CHECK(apply_t_plus(u2, kN2L2) == MultiPoly::constant(2, GaussScalar(10)));

  // The constant is annihilated for every coupling: kinetic and potential
  // contributions of the Jastrow factor cancel exactly.
  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    SystemParams params = SystemParams::make(2, rng.nonzero_rational(9, 5));
    auto point = distinct_point(rng, 2);
    CHECK(jastrow_conjugation_check(MultiPoly::constant(2, GaussScalar(1)), point, params)
              .passed());
  }

  // Triple cancellation at N=3.
  SystemParams n3l2 = SystemParams::make(3, Rational(2));
  std::vector<Rational> pt3 = {Rational(2), Rational(0), Rational(-1)};
  CHECK(jastrow_conjugation_check(MultiPoly::constant(3, GaussScalar(1)), pt3, n3l2).passed());

  CHECK_THROWS_AS(
      jastrow_conjugation_check(u2, {Rational(1), Rational(1)}, kN2L2), Error);
  try {
    jastrow_conjugation_check(u2, {Rational(1), Rational(1)}, kN2L2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CoincidentCoordinates);
  }

  for (int n = 2; n <= 4; ++n) {
    SystemParams params = SystemParams::make(n, rng.nonzero_rational(9, 5));
    for (int m = 0; m <= 4; ++m) {
      for (const auto& e : invariant_basis(n, m).elements) {
        for (int k = 0; k < 5; ++k) {
          CHECK(jastrow_conjugation_check(e, distinct_point(rng, n), params).passed());
        }
      }
    }
  }
}
