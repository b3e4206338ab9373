#include "su11/kernel.hpp"

#include <map>

namespace su11 {

namespace {

// Stacks polynomials as columns of a monomial-coefficient matrix over a
// shared monomial index.
ExactMatrix monomial_matrix(const std::vector<MultiPoly>& polys,
                            std::map<ExpVec, int, GradedLexDesc>& index) {
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms())
      if (index.find(e) == index.end()) index.emplace(e, 0);
  int row = 0;
  for (auto& [e, r] : index) r = row++;

  ExactMatrix m(row, static_cast<int>(polys.size()));
  for (size_t c = 0; c < polys.size(); ++c)
    for (const auto& [e, coeff] : polys[c].terms())
      m.at(index.at(e), static_cast<int>(c)) = coeff;
  return m;
}

}  // namespace

std::optional<std::vector<GaussScalar>> coordinates_in_basis(const MultiPoly& p,
                                                             const InvariantBasis& basis) {
  std::map<ExpVec, int, GradedLexDesc> index;
  std::vector<MultiPoly> cols = basis.elements;
  cols.push_back(p);  // ensures p's monomials are indexed
  ExactMatrix all = monomial_matrix(cols, index);

  ExactMatrix a(all.rows(), basis.dimension());
  std::vector<GaussScalar> b(all.rows());
  for (int r = 0; r < all.rows(); ++r) {
    for (int c = 0; c < basis.dimension(); ++c) a.at(r, c) = all.at(r, c);
    b[r] = all.at(r, basis.dimension());
  }
  auto x = solve_exact(a, b);
  if (!x.has_value()) return std::nullopt;

  // The solve fixes free coordinates to zero; verify the combination
  // reproduces p exactly so rank deficiencies cannot slip through.
  MultiPoly recombined(p.n_vars());
  for (int c = 0; c < basis.dimension(); ++c)
    recombined = recombined + basis.elements[c].scaled((*x)[c]);
  if (recombined != p) return std::nullopt;
  return x;
}

ExactMatrix assemble_t_plus_matrix(const SystemParams& params, int m) {
  if (m < 0) fail(ErrorKind::InvalidDegree, "degree must be >= 0");
  InvariantBasis domain = invariant_basis(params.n_particles, m);
  InvariantBasis target =
      m >= 2 ? invariant_basis(params.n_particles, m - 2) : InvariantBasis{params.n_particles, 0, {}};

  ExactMatrix out(target.dimension(), domain.dimension());
  for (int c = 0; c < domain.dimension(); ++c) {
    MultiPoly image = apply_t_plus(domain.elements[c], params);
    if (image.is_zero()) continue;
    if (target.dimension() == 0)
      fail(ErrorKind::Internal, "nonzero generator image with empty target space");
    auto coords = coordinates_in_basis(image, target);
    if (!coords.has_value())
      fail(ErrorKind::Internal, "generator image escaped the invariant target span");
    for (int r = 0; r < target.dimension(); ++r) out.at(r, c) = (*coords)[r];
  }
  return out;
}

KernelBasis zero_energy_states(const SystemParams& params, int m) {
  KernelBasis k;
  k.params = params;
  k.degree = m;
  k.mu = params.mu_of(m);

  InvariantBasis domain = invariant_basis(params.n_particles, m);
  ExactMatrix mat = assemble_t_plus_matrix(params, m);
  k.coordinates = exact_nullspace(mat);

  for (const auto& coords : k.coordinates) {
    MultiPoly v(params.n_particles);
    for (int c = 0; c < domain.dimension(); ++c)
      v = v + domain.elements[c].scaled(coords[c]);

    // The defining relations are re-verified on the polynomial itself,
    // independent of the elimination route.
    MultiPoly tp = apply_t_plus(v, params);
    if (!tp.is_zero())
      fail(ErrorKind::Internal, "kernel vector fails T+ annihilation at degree " +
                                    std::to_string(m));
    MultiPoly tz = apply_t_zero(v, params) - v.scaled(GaussScalar(k.mu));
    if (!tz.is_zero())
      fail(ErrorKind::Internal, "kernel vector fails the T0 eigenvalue at degree " +
                                    std::to_string(m));
    k.vectors.push_back(std::move(v));
  }
  return k;
}

nlohmann::ordered_json kernel_to_json(const KernelBasis& k) {
  nlohmann::ordered_json j;
  j["N"] = k.params.n_particles;
  j["lambda"] = k.params.lambda.str();
  j["m"] = k.degree;
  j["mu"] = k.mu.str();
  j["dimension"] = k.dimension();
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& v : k.vectors) basis.push_back(v.str());
  j["basis"] = basis;
  return j;
}

}  // namespace su11
