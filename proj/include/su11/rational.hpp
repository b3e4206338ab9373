#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "su11/error.hpp"

namespace su11 {

/// Exact rational number over arbitrary-precision integers.
///
/// Always stored canonically: denominator > 0, gcd(|num|, den) = 1,
/// zero as 0/1. Equality is plain component equality of canonical forms.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  static Rational from_mpq(mpq_class q);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return from_canonical(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
  std::string str() const;

  /// Parses "p", "-p", "p/q". Throws ZeroDenominator / ConfigError.
  static Rational parse(const std::string& s);

 private:
  static Rational from_canonical(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  mpq_class v_;  // kept canonical at all times
};

/// Canonical reduction of num/den.
Rational normalize_rational(const mpz_class& num, const mpz_class& den);

Rational abs(const Rational& x);

/// Exact square root of a perfect-square rational (result >= 0).
/// Throws NotPerfectSquare when x has no rational root.
Rational exact_sqrt(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace su11
