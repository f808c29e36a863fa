#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mvsf/gauss_rational.hpp"

namespace mvsf {

struct NonDivisibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCosPolynomialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CosPoly;

// Trigonometric polynomial in t_1..t_n, stored as a Laurent polynomial in
// z_j = exp(i t_j) over the Gaussian rationals. The exponent map is kept in
// lexicographic order and never stores zero coefficients, so equal functions
// have equal representations. Values are immutable once built and all
// operations are pure, so instances can be shared across threads freely.
class TrigPoly {
 public:
  using Exp = std::vector<int>;
  using TermMap = std::map<Exp, GaussRational>;

  TrigPoly() : nvars_(0) {}
  explicit TrigPoly(int nvars) : nvars_(nvars) {}

  static TrigPoly zero(int nvars) { return TrigPoly(nvars); }
  static TrigPoly constant(int nvars, const GaussRational& c);
  static TrigPoly one(int nvars) { return constant(nvars, GaussRational(1)); }
  static TrigPoly monomial(int nvars, const Exp& e, const GaussRational& c);
  // cos t_j and sin t_j, 1-based j.
  static TrigPoly cosT(int nvars, int j);
  static TrigPoly sinT(int nvars, int j);
  // cos(a.t) and sin(a.t) for an integer covector a.
  static TrigPoly cosLin(int nvars, const Exp& a);
  static TrigPoly sinLin(int nvars, const Exp& a);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }

  GaussRational coeff(const Exp& e) const;
  // Leading exponent in lexicographic order; requires a nonzero polynomial.
  const Exp& leadingExp() const;

  TrigPoly operator-() const;
  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }
  TrigPoly& operator*=(const GaussRational& c);
  friend TrigPoly operator*(TrigPoly a, const GaussRational& c) { return a *= c; }
  friend TrigPoly operator*(const GaussRational& c, TrigPoly a) { return a *= c; }
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

  TrigPoly pow(long k) const;

  // d/dt_j acting on z^e; each term picks up a factor i*e_j.
  TrigPoly ddt(int j) const;

  // Complex conjugate as a function of real t (z -> z^{-1}, conjugated
  // coefficients). A polynomial is real-valued iff conjugate() == *this.
  TrigPoly conjugate() const;
  bool isRealValued() const { return conjugate() == *this; }

  // Value at t = 0 (all z_j = 1).
  GaussRational evalAtZero() const;

  // Numeric evaluation at real t (for floating cross-checks only).
  std::complex<double> evalAt(const std::vector<double>& t) const;

  // Substitution t_j -> t_{w(j)} for a permutation w of {1..n} (1-based,
  // w[j-1] = image of j).
  TrigPoly permuteVars(const std::vector<int>& w) const;
  // Substitution t_j -> -t_j.
  TrigPoly negateVar(int j) const;

  // Exact quotient num/den in the Laurent ring; throws NonDivisibleError if
  // den does not divide num.
  static TrigPoly exactDiv(const TrigPoly& num, const TrigPoly& den);

  // Conversion to a polynomial in cos t_1..cos t_n; throws
  // NotCosPolynomialError when no such expression exists.
  CosPoly toCos() const;

 private:
  void addTerm(const Exp& e, const GaussRational& c);

  int nvars_;
  TermMap terms_;

  friend class CosPoly;
};

// Polynomial in cos t_1..cos t_n with rational coefficients.
class CosPoly {
 public:
  using Exp = std::vector<int>;  // exponents >= 0
  using TermMap = std::map<Exp, Rational>;

  CosPoly() : nvars_(0) {}
  explicit CosPoly(int nvars) : nvars_(nvars) {}
  static CosPoly monomial(int nvars, const Exp& e, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  CosPoly& operator+=(const CosPoly& o);
  friend CosPoly operator*(const CosPoly& a, const CosPoly& b);

  TrigPoly toTrig() const;

  friend bool operator==(const CosPoly& a, const CosPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  TermMap terms_;

  friend class TrigPoly;
};

// Product of cos-monomials over an index set, e.g. cos t_H.
TrigPoly cosProduct(int nvars, const std::vector<int>& indices);

// From a vector of natural exponents: prod_j cos^{e_j} t_j.
TrigPoly cosMonomial(const std::vector<int>& exps);

// Elementary symmetric polynomial of degree i in { cos^2 t_j : j not in
// excluded }, with 1 <= j <= nvars. Returns 0 when i is out of range,
// 1 when i == 0.
TrigPoly psiElem(int nvars, int i, const std::vector<int>& excluded = {});

}  // namespace mvsf
