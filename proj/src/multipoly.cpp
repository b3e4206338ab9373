#include "su11/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace su11 {

namespace {

unsigned exp_sum(const ExpVec& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

}  // namespace

bool GradedLexDesc::operator()(const ExpVec& a, const ExpVec& b) const {
  unsigned da = exp_sum(a), db = exp_sum(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 1) fail(ErrorKind::DimensionMismatch, "n_vars must be >= 1");
}

MultiPoly MultiPoly::constant(int n_vars, const GaussScalar& c) {
  MultiPoly p(n_vars);
  p.add_term(ExpVec(n_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int n_vars, int i) {
  if (i < 1 || i > n_vars) fail(ErrorKind::IndexOutOfRange, "variable index out of range");
  ExpVec e(n_vars, 0);
  e[i - 1] = 1;
  return monomial(n_vars, e, GaussScalar(1));
}

MultiPoly MultiPoly::monomial(int n_vars, ExpVec exps, const GaussScalar& c) {
  MultiPoly p(n_vars);
  if (static_cast<int>(exps.size()) != n_vars)
    fail(ErrorKind::DimensionMismatch, "exponent vector length mismatch");
  p.add_term(exps, c);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(exp_sum(terms_.begin()->first));
}

void MultiPoly::add_term(const ExpVec& exps, const GaussScalar& c) {
  if (static_cast<int>(exps.size()) != n_vars_)
    fail(ErrorKind::DimensionMismatch, "exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  if (n_vars_ != o.n_vars_)
    fail(ErrorKind::DimensionMismatch, "operands have different variable counts");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(GaussScalar(-1)); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r(n_vars_);
  ExpVec e(n_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int k = 0; k < n_vars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const GaussScalar& c) const {
  MultiPoly r(n_vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(n_vars_, GaussScalar(1));
  for (unsigned t = 0; t < k; ++t) r = r * *this;
  return r;
}

MultiPoly MultiPoly::derivative(int i) const {
  if (i < 1 || i > n_vars_) fail(ErrorKind::IndexOutOfRange, "derivative index out of range");
  MultiPoly r(n_vars_);
  for (const auto& [e, c] : terms_) {
    unsigned a = e[i - 1];
    if (a == 0) continue;
    ExpVec d = e;
    d[i - 1] = a - 1;
    r.add_term(d, c * GaussScalar(Rational(static_cast<long>(a))));
  }
  return r;
}

MultiPoly MultiPoly::divide_by_difference(int i, int j) const {
  if (i < 1 || i > n_vars_ || j < 1 || j > n_vars_ || i == j)
    fail(ErrorKind::IndexOutOfRange, "difference indices out of range");

  // View p as a univariate polynomial in x_i with MultiPoly coefficients,
  // then run synthetic division by (x_i - x_j).
  std::map<unsigned, MultiPoly> by_deg;
  unsigned dmax = 0;
  for (const auto& [e, c] : terms_) {
    unsigned a = e[i - 1];
    dmax = std::max(dmax, a);
    ExpVec stripped = e;
    stripped[i - 1] = 0;
    auto it = by_deg.find(a);
    if (it == by_deg.end()) it = by_deg.emplace(a, MultiPoly(n_vars_)).first;
    it->second.add_term(stripped, c);
  }
  auto coeff_at = [&](unsigned k) -> MultiPoly {
    auto it = by_deg.find(k);
    return it == by_deg.end() ? MultiPoly(n_vars_) : it->second;
  };

  MultiPoly xj = variable(n_vars_, j);
  if (dmax == 0) {
    if (!is_zero())
      fail(ErrorKind::NotDivisible, "polynomial is independent of x" + std::to_string(i));
    return MultiPoly(n_vars_);
  }

  std::vector<MultiPoly> q(dmax, MultiPoly(n_vars_));
  q[dmax - 1] = coeff_at(dmax);
  for (unsigned k = dmax - 1; k >= 1; --k) q[k - 1] = coeff_at(k) + xj * q[k];
  MultiPoly rem = coeff_at(0) + xj * q[0];
  if (!rem.is_zero())
    fail(ErrorKind::NotDivisible,
         "nonzero remainder dividing by (x" + std::to_string(i) + " - x" + std::to_string(j) + ")");

  MultiPoly result(n_vars_);
  for (unsigned k = 0; k < dmax; ++k) {
    for (const auto& [e, c] : q[k].terms_) {
      ExpVec lifted = e;
      lifted[i - 1] += k;
      result.add_term(lifted, c);
    }
  }
  return result;
}

GaussScalar MultiPoly::eval(const std::vector<GaussScalar>& point) const {
  if (static_cast<int>(point.size()) != n_vars_)
    fail(ErrorKind::DimensionMismatch, "evaluation point length mismatch");
  GaussScalar acc(0);
  for (const auto& [e, c] : terms_) {
    GaussScalar t = c;
    for (int k = 0; k < n_vars_; ++k) {
      for (unsigned r = 0; r < e[k]; ++r) t *= point[k];
    }
    acc += t;
  }
  return acc;
}

GaussScalar MultiPoly::eval_rational(const std::vector<Rational>& point) const {
  std::vector<GaussScalar> p;
  p.reserve(point.size());
  for (const auto& r : point) p.emplace_back(r);
  return eval(p);
}

bool MultiPoly::is_symmetric() const {
  // Adjacent transpositions generate the full symmetric group.
  for (int k = 0; k + 1 < n_vars_; ++k) {
    MultiPoly swapped(n_vars_);
    for (const auto& [e, c] : terms_) {
      ExpVec s = e;
      std::swap(s[k], s[k + 1]);
      swapped.add_term(s, c);
    }
    if (swapped != *this) return false;
  }
  return true;
}

bool MultiPoly::is_translation_invariant() const {
  MultiPoly total(n_vars_);
  for (int i = 1; i <= n_vars_; ++i) total = total + derivative(i);
  return total.is_zero();
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = exp_sum(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (exp_sum(e) != d) return std::nullopt;
  }
  return static_cast<int>(d);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, c] : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    os << "(" << c.str() << ")";
    bool first_factor = true;
    for (int k = 0; k < n_vars_; ++k) {
      if (e[k] == 0) continue;
      os << (first_factor ? "*" : " ") << "x" << (k + 1) << "^" << e[k];
      first_factor = false;
    }
  }
  return os.str();
}

MultiPoly MultiPoly::parse(const std::string& s, int n_vars) {
  MultiPoly p(n_vars);
  std::string t = s;
  if (t == "0" || t.empty()) return p;

  size_t pos = 0;
  while (pos < t.size()) {
    size_t next = t.find(" + ", pos);
    std::string term = next == std::string::npos ? t.substr(pos) : t.substr(pos, next - pos);
    pos = next == std::string::npos ? t.size() : next + 3;

    size_t close = term.find(')');
    if (term.empty() || term[0] != '(' || close == std::string::npos)
      fail(ErrorKind::ConfigError, "bad polynomial term '" + term + "'");
    GaussScalar c = GaussScalar::parse(term.substr(1, close - 1));
    ExpVec e(n_vars, 0);
    size_t k = close + 1;
    if (k < term.size() && term[k] == '*') ++k;
    while (k < term.size()) {
      if (term[k] == ' ') {
        ++k;
        continue;
      }
      if (term[k] != 'x') fail(ErrorKind::ConfigError, "bad factor in '" + term + "'");
      ++k;
      size_t caret = term.find('^', k);
      if (caret == std::string::npos) fail(ErrorKind::ConfigError, "missing '^' in '" + term + "'");
      int idx = std::stoi(term.substr(k, caret - k));
      size_t end = caret + 1;
      while (end < term.size() && term[end] != ' ') ++end;
      unsigned a = static_cast<unsigned>(std::stoul(term.substr(caret + 1, end - caret - 1)));
      if (idx < 1 || idx > n_vars) fail(ErrorKind::IndexOutOfRange, "variable index in '" + term + "'");
      e[idx - 1] += a;
      k = end;
    }
    p.add_term(e, c);
  }
  return p;
}

Invariance invariance_predicates(const MultiPoly& p) {
  Invariance inv;
  inv.symmetric = p.is_symmetric();
  inv.translation_invariant = p.is_translation_invariant();
  inv.homogeneous_degree = p.homogeneous_degree();
  return inv;
}

MultiPoly shifted_power_sum(int n, int k) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "need at least two particles");
  if (k < 2) fail(ErrorKind::InvalidDegree, "centered power sums start at k = 2 (k = 1 vanishes)");

  // xi_i = x_i - X as a linear polynomial.
  Rational inv_n(1, n);
  MultiPoly sum(n);
  for (int i = 1; i <= n; ++i) {
    MultiPoly xi(n);
    for (int j = 1; j <= n; ++j) {
      Rational coef = (i == j) ? Rational(1) - inv_n : -inv_n;
      ExpVec e(n, 0);
      e[j - 1] = 1;
      xi.add_term(e, GaussScalar(coef));
    }
    sum = sum + xi.pow(static_cast<unsigned>(k));
  }
  return sum;
}

std::vector<std::vector<int>> partitions_with_parts(int m, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Largest-first recursion yields lex-descending order.
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 2; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  if (m >= 0) rec(rec, m, max_part);
  return out;
}

InvariantBasis invariant_basis(int n, int m) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "need at least two particles");
  if (m < 0) fail(ErrorKind::InvalidDegree, "degree must be >= 0");

  InvariantBasis basis;
  basis.n_vars = n;
  basis.degree = m;
  for (const auto& partition : partitions_with_parts(m, n)) {
    MultiPoly e = MultiPoly::constant(n, GaussScalar(1));
    for (int part : partition) e = e * shifted_power_sum(n, part);
    basis.elements.push_back(std::move(e));
  }
  return basis;
}

}  // namespace su11
