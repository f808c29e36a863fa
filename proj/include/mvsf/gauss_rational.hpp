#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mvsf {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(p, q) does not reduce to lowest terms on its own; every
// two-argument construction must go through here.
inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Gaussian rational a + b*i with exact field arithmetic.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() : re(0), im(0) {}
  GaussRational(long r) : re(r), im(0) {}
  GaussRational(const Rational& r) : re(r), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  bool isZero() const { return re == 0 && im == 0; }
  bool isReal() const { return im == 0; }

  GaussRational conj() const { return GaussRational(re, -im); }
  Rational normSq() const { return re * re + im * im; }

  GaussRational operator-() const { return GaussRational(-re, -im); }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.normSq();
    if (n == 0) throw std::domain_error("GaussRational: division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline std::string ratStr(const Rational& r) { return r.get_str(); }

inline Rational ratFromStr(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

// Pochhammer symbol (x)_k = x (x+1) ... (x+k-1).
inline Rational pochhammer(const Rational& x, long k) {
  Rational p(1);
  for (long j = 0; j < k; ++j) p *= x + j;
  return p;
}

inline Integer factorial(long k) {
  Integer f(1);
  for (long j = 2; j <= k; ++j) f *= j;
  return f;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer b(1);
  for (long j = 0; j < k; ++j) {
    b *= (n - j);
    b /= (j + 1);
  }
  return b;
}

}  // namespace mvsf
