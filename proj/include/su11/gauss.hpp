#pragma once

#include <iosfwd>
#include <string>

#include "su11/rational.hpp"

namespace su11 {

/// Element of Q(i): exact complex rational re + im*i.
struct GaussScalar {
  Rational re;
  Rational im;

  GaussScalar() = default;
  GaussScalar(Rational r) : re(std::move(r)) {}
  GaussScalar(long r) : re(r) {}
  GaussScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussScalar i() { return GaussScalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussScalar conj() const { return GaussScalar(re, -im); }

  GaussScalar operator-() const { return GaussScalar(-re, -im); }

  GaussScalar& operator+=(const GaussScalar& o);
  GaussScalar& operator-=(const GaussScalar& o);
  GaussScalar& operator*=(const GaussScalar& o);
  GaussScalar& operator/=(const GaussScalar& o);

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }

  friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussScalar& a, const GaussScalar& b) { return !(a == b); }

  /// Canonical forms: "0", "3/2", "i", "-i", "2/3*i", "1/2+3*i", "1/2-i".
  std::string str() const;

  /// Inverse of str(); also accepts any "<rat>", "<rat>*i", "[rat][+-][rat*]i".
  static GaussScalar parse(const std::string& s);
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& z);

}  // namespace su11
