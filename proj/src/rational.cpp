#include "su11/rational.hpp"

#include <ostream>

namespace su11 {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotPerfectSquare: return "NotPerfectSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::NonSymmetricInput: return "NonSymmetricInput";
    case ErrorKind::NotTranslationInvariant: return "NotTranslationInvariant";
    case ErrorKind::CoincidentCoordinates: return "CoincidentCoordinates";
    case ErrorKind::ResolventPole: return "ResolventPole";
    case ErrorKind::NoConsistentRoot: return "NoConsistentRoot";
    case ErrorKind::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorKind::NoAnnihilatedVacuum: return "NoAnnihilatedVacuum";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::ZeroDenominator, "denominator must be nonzero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::ZeroDenominator, "denominator must be nonzero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
  if (q.get_den() == 0) fail(ErrorKind::ZeroDenominator, "denominator must be nonzero");
  q.canonicalize();
  return from_canonical(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  if (t.empty()) fail(ErrorKind::ConfigError, "empty rational literal");

  auto slash = t.find('/');
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto digits_ok = [](const std::string& d, bool allow_sign) {
    if (d.empty()) return false;
    size_t i = (allow_sign && d[0] == '-') ? 1 : 0;
    if (i == d.size()) return false;
    for (; i < d.size(); ++i)
      if (d[i] < '0' || d[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false))
    fail(ErrorKind::ConfigError, "bad rational literal '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorKind::ZeroDenominator, "denominator must be nonzero in '" + s + "'");
  return Rational(n, d);
}

Rational normalize_rational(const mpz_class& num, const mpz_class& den) {
  return Rational(num, den);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational exact_sqrt(const Rational& x) {
  if (x.sign() < 0)
    fail(ErrorKind::NotPerfectSquare, "negative argument " + x.str());
  if (x.is_zero()) return Rational(0);
  const mpz_class& n = x.num();
  const mpz_class& d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    fail(ErrorKind::NotPerfectSquare, x.str() + " is not a rational square");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  if (r * r != x) fail(ErrorKind::Internal, "exact_sqrt self-check failed");
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace su11
