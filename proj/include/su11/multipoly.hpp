#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su11/gauss.hpp"

namespace su11 {

using ExpVec = std::vector<unsigned>;

/// Graded-lexicographic term order, leading (highest) term first.
struct GradedLexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse exact multivariate polynomial in x_1..x_N over Q(i).
///
/// Canonical form: no zero coefficients stored; terms ordered graded-lex
/// with the leading term first. Values are immutable in spirit — all
/// operations return new polynomials.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, GaussScalar, GradedLexDesc>;

  explicit MultiPoly(int n_vars);

  static MultiPoly constant(int n_vars, const GaussScalar& c);
  static MultiPoly variable(int n_vars, int i);  // x_i, 1-based
  static MultiPoly monomial(int n_vars, ExpVec exps, const GaussScalar& c);

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree of the leading term; -1 for the zero polynomial.
  int total_degree() const;

  void add_term(const ExpVec& exps, const GaussScalar& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const GaussScalar& c) const;
  MultiPoly pow(unsigned k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Formal partial derivative with respect to x_i (1-based).
  MultiPoly derivative(int i) const;

  /// Exact quotient p / (x_i - x_j). Throws NotDivisible when the
  /// remainder is nonzero.
  MultiPoly divide_by_difference(int i, int j) const;

  GaussScalar eval(const std::vector<GaussScalar>& point) const;
  GaussScalar eval_rational(const std::vector<Rational>& point) const;

  bool is_symmetric() const;
  bool is_translation_invariant() const;
  std::optional<int> homogeneous_degree() const;

  /// Canonical text form, graded-lex order:
  /// "(coeff)*x1^a1 x2^a2 + ..." with zero-exponent factors omitted;
  /// the zero polynomial prints "0".
  std::string str() const;
  static MultiPoly parse(const std::string& s, int n_vars);

 private:
  void check_same_vars(const MultiPoly& o) const;

  int n_vars_;
  TermMap terms_;
};

struct Invariance {
  bool symmetric = false;
  bool translation_invariant = false;
  std::optional<int> homogeneous_degree;
};

Invariance invariance_predicates(const MultiPoly& p);

/// Power sum of the centered variables: sum_i (x_i - X)^k, X the mean.
/// Requires N >= 2, k >= 2 (k = 1 vanishes identically -> InvalidDegree).
MultiPoly shifted_power_sum(int n, int k);

struct InvariantBasis {
  int n_vars = 0;
  int degree = 0;
  std::vector<MultiPoly> elements;

  int dimension() const { return static_cast<int>(elements.size()); }
};

/// Monomials prod_k p_k(xi)^{a_k} over partitions of m with parts in
/// [2..N], in deterministic (descending-part, lex-descending) order.
InvariantBasis invariant_basis(int n, int m);

/// Partitions of m into non-increasing parts from [2..max_part],
/// largest-first lexicographic order. Exposed for report tabulation.
std::vector<std::vector<int>> partitions_with_parts(int m, int max_part);

}  // namespace su11
