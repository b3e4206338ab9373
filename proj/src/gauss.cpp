#include "su11/gauss.hpp"

#include <ostream>

namespace su11 {

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in Q(i)");
  Rational n2 = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n2;
  Rational i = (im * o.re - re * o.im) / n2;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string GaussScalar::str() const {
  if (im.is_zero()) return re.str();
  std::string imag;
  if (im == Rational(1)) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.str() + "*i";
  }
  if (re.is_zero()) return imag;
  if (im.sign() > 0) return re.str() + "+" + imag;
  return re.str() + imag;  // imag already carries its '-'
}

namespace {

// Parses an imaginary token with its trailing 'i' already seen:
// "", "-", "+" mean 1/-1/1; otherwise "<rat>" or "<rat>*".
Rational parse_imag_factor(std::string t) {
  if (t.empty() || t == "+") return Rational(1);
  if (t == "-") return Rational(-1);
  if (!t.empty() && t.back() == '*') t.pop_back();
  return Rational::parse(t);
}

}  // namespace

GaussScalar GaussScalar::parse(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) fail(ErrorKind::ConfigError, "empty scalar literal");

  if (t.back() != 'i') return GaussScalar(Rational::parse(t));

  t.pop_back();  // strip trailing 'i'
  // Split on the last top-level '+'/'-' that is not the leading sign and not
  // part of "*" glue; rational literals contain no inner signs.
  size_t split = std::string::npos;
  for (size_t k = t.size(); k-- > 1;) {
    if (t[k] == '+' || t[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    return GaussScalar(Rational(0), parse_imag_factor(t));
  }
  std::string head = t.substr(0, split);
  std::string tail = t.substr(split);  // keeps the sign
  // "2/3*i" has its '/' or '*' after the sign position candidate; if the sign
  // we found belongs to the imaginary factor's own leading sign (e.g. "-i"),
  // head is empty and the whole literal is imaginary.
  if (head.empty()) return GaussScalar(Rational(0), parse_imag_factor(tail));
  Rational re = Rational::parse(head);
  Rational im;
  if (tail == "+") {
    im = Rational(1);
  } else if (tail == "-") {
    im = Rational(-1);
  } else if (tail.size() >= 2 && tail[0] == '+') {
    im = parse_imag_factor(tail.substr(1));
  } else {
    im = parse_imag_factor(tail);
  }
  return GaussScalar(std::move(re), std::move(im));
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& z) { return os << z.str(); }

}  // namespace su11
