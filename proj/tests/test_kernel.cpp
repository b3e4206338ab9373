#include <doctest.h>

#include "helpers.hpp"
#include "su11/kernel.hpp"
#include "su11/rng.hpp"

using namespace su11;
using su11::testing::oracle_nullspace;

namespace {

const SystemParams kN3Half = SystemParams::make(3, Rational(1, 2));

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows, int cols) {
  ExactMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = GaussScalar(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("nullspace of elementary matrices") {
  CHECK(exact_nullspace(from_rows({{1, 0}, {0, 1}}, 2)).empty());

  auto full = exact_nullspace(ExactMatrix(0, 3));
  REQUIRE(full.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(full[i][j] == (i == j ? GaussScalar(1) : GaussScalar(0)));

  auto line = exact_nullspace(from_rows({{1, 1}}, 2));
  REQUIRE(line.size() == 1);
  CHECK(line[0][0] == GaussScalar(1));
  CHECK(line[0][1] == GaussScalar(-1));
}

TEST_CASE("nullspace agrees with the independent elimination oracle") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = static_cast<int>(rng.int_in(1, 5));
    int cols = static_cast<int>(rng.int_in(1, 6));
    ExactMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (rng.int_in(0, 2) != 0) m.at(r, c) = rng.gauss(5, 3);
    auto ours = exact_nullspace(m);
    auto oracle = oracle_nullspace(m);
    REQUIRE(ours.size() == oracle.size());
    for (size_t v = 0; v < ours.size(); ++v)
      for (int c = 0; c < cols; ++c) CHECK(ours[v][c] == oracle[v][c]);
  }
}

TEST_CASE("rank-nullity on generator matrices") {
  for (int n = 2; n <= 3; ++n) {
    SystemParams params = SystemParams::make(n, Rational(1, 2));
    for (int m = 0; m <= 6; ++m) {
      ExactMatrix mat = assemble_t_plus_matrix(params, m);
      int dim_domain = invariant_basis(n, m).dimension();
      CHECK(mat.cols() == dim_domain);
      int nullity = static_cast<int>(exact_nullspace(mat).size());
      std::vector<std::vector<GaussScalar>> rows(mat.rows(),
                                                 std::vector<GaussScalar>(mat.cols()));
      for (int r = 0; r < mat.rows(); ++r)
        for (int c = 0; c < mat.cols(); ++c) rows[r][c] = mat.at(r, c);
      int rank =
          static_cast<int>(testing::oracle_rref(std::move(rows), mat.cols()).pivot_cols.size());
      CHECK(nullity + rank == dim_domain);
    }
  }
}

TEST_CASE("assembled matrix entries") {
  // Single invariant of degree 2 maps to (N-1)(1 + lambda N) times the
  // constant; at N=3, lambda=1/2 that is 5.
  ExactMatrix m2 = assemble_t_plus_matrix(kN3Half, 2);
  REQUIRE(m2.rows() == 1);
  REQUIRE(m2.cols() == 1);
  CHECK(m2.at(0, 0) == GaussScalar(5));

  ExactMatrix m3 = assemble_t_plus_matrix(kN3Half, 3);
  CHECK(m3.rows() == 0);
  CHECK(m3.cols() == 1);

  ExactMatrix m0 = assemble_t_plus_matrix(SystemParams::make(2, Rational(2)), 0);
  CHECK(m0.rows() == 0);
  CHECK(m0.cols() == 1);
}

TEST_CASE("zero-energy states at fixed coupling") {
  KernelBasis k0 = zero_energy_states(kN3Half, 0);
  REQUIRE(k0.dimension() == 1);
  CHECK(k0.vectors[0] == MultiPoly::constant(3, GaussScalar(1)));

  CHECK(zero_energy_states(kN3Half, 2).dimension() == 0);

  KernelBasis k3 = zero_energy_states(kN3Half, 3);
  REQUIRE(k3.dimension() == 1);
  CHECK(k3.vectors[0] == shifted_power_sum(3, 3));
  CHECK(k3.mu == kN3Half.mu_of(3));
}

TEST_CASE("kernel dimensions for generic couplings") {
  Rng rng(67);
  for (int trial = 0; trial < 4; ++trial) {
    SystemParams params = SystemParams::make(3, rng.positive_rational(9, 7));
    CHECK(zero_energy_states(params, 2).dimension() == 0);
    CHECK(zero_energy_states(params, 3).dimension() == 1);
    // Cross-checked against the oracle elimination for every degree.
    for (int m = 0; m <= 6; ++m) {
      ExactMatrix mat = assemble_t_plus_matrix(params, m);
      CHECK(zero_energy_states(params, m).dimension() ==
            static_cast<int>(oracle_nullspace(mat).size()));
    }
  }
}

TEST_CASE("kernel output is deterministic") {
  KernelBasis a = zero_energy_states(kN3Half, 6);
  KernelBasis b = zero_energy_states(kN3Half, 6);
  REQUIRE(a.dimension() == b.dimension());
  for (int v = 0; v < a.dimension(); ++v) {
    CHECK(a.vectors[v] == b.vectors[v]);
    CHECK(a.vectors[v].str() == b.vectors[v].str());
  }
  CHECK(kernel_to_json(a).dump() == kernel_to_json(b).dump());
}

TEST_CASE("invariant basis elements are linearly independent") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= 8; ++m) {
      InvariantBasis basis = invariant_basis(n, m);
      if (basis.dimension() == 0) continue;
      std::map<ExpVec, int, GradedLexDesc> index;
      for (const auto& e : basis.elements)
        for (const auto& [exp, c] : e.terms())
          if (index.find(exp) == index.end())
            index.emplace(exp, static_cast<int>(index.size()));
      std::vector<std::vector<GaussScalar>> rows(basis.dimension(),
                                                 std::vector<GaussScalar>(index.size()));
      for (int b = 0; b < basis.dimension(); ++b)
        for (const auto& [exp, c] : basis.elements[b].terms()) rows[b][index.at(exp)] = c;
      int rank = static_cast<int>(
          testing::oracle_rref(std::move(rows), static_cast<int>(index.size()))
              .pivot_cols.size());
      CHECK(rank == basis.dimension());
    }
  }
}

TEST_CASE("kernel JSON descriptor shape") {
  auto j = kernel_to_json(zero_energy_states(kN3Half, 3));
  CHECK(j["N"] == 3);
  CHECK(j["lambda"] == "1/2");
  CHECK(j["m"] == 3);
  CHECK(j["dimension"] == 1);
  REQUIRE(j["basis"].size() == 1);
  CHECK(MultiPoly::parse(j["basis"][0].get<std::string>(), 3) == shifted_power_sum(3, 3));
}
