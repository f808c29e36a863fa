#include "mvsf/trigpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace mvsf {

void TrigPoly::addTerm(const Exp& e, const GaussRational& c) {
  if (c.isZero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

TrigPoly TrigPoly::constant(int nvars, const GaussRational& c) {
  TrigPoly p(nvars);
  p.addTerm(Exp(nvars, 0), c);
  return p;
}

TrigPoly TrigPoly::monomial(int nvars, const Exp& e, const GaussRational& c) {
  if ((int)e.size() != nvars) throw std::invalid_argument("TrigPoly::monomial: exponent size");
  TrigPoly p(nvars);
  p.addTerm(e, c);
  return p;
}

TrigPoly TrigPoly::cosT(int nvars, int j) {
  Exp a(nvars, 0);
  a[j - 1] = 1;
  return cosLin(nvars, a);
}

TrigPoly TrigPoly::sinT(int nvars, int j) {
  Exp a(nvars, 0);
  a[j - 1] = 1;
  return sinLin(nvars, a);
}

TrigPoly TrigPoly::cosLin(int nvars, const Exp& a) {
  // cos(a.t) = (z^a + z^-a)/2
  TrigPoly p(nvars);
  Exp neg(a);
  for (auto& x : neg) x = -x;
  p.addTerm(a, GaussRational(Rational(1, 2)));
  p.addTerm(neg, GaussRational(Rational(1, 2)));
  return p;
}

TrigPoly TrigPoly::sinLin(int nvars, const Exp& a) {
  // sin(a.t) = (z^a - z^-a)/(2i) = -i/2 z^a + i/2 z^-a
  TrigPoly p(nvars);
  Exp neg(a);
  for (auto& x : neg) x = -x;
  p.addTerm(a, GaussRational(Rational(0), Rational(-1, 2)));
  p.addTerm(neg, GaussRational(Rational(0), Rational(1, 2)));
  return p;
}

GaussRational TrigPoly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRational() : it->second;
}

const TrigPoly::Exp& TrigPoly::leadingExp() const {
  if (terms_.empty()) throw std::logic_error("leadingExp of zero polynomial");
  return terms_.rbegin()->first;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly p(nvars_);
  for (auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("TrigPoly: mixed variable counts");
  for (auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("TrigPoly: mixed variable counts");
  for (auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("TrigPoly: mixed variable counts");
  TrigPoly p(a.nvars_);
  TrigPoly::Exp e(a.nvars_);
  for (auto& [ea, ca] : a.terms_) {
    for (auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      p.addTerm(e, ca * cb);
    }
  }
  return p;
}

TrigPoly& TrigPoly::operator*=(const GaussRational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TrigPoly TrigPoly::pow(long k) const {
  if (k < 0) throw std::invalid_argument("TrigPoly::pow: negative exponent");
  TrigPoly r = one(nvars_);
  TrigPoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

TrigPoly TrigPoly::ddt(int j) const {
  TrigPoly p(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[j - 1] == 0) continue;
    p.terms_.emplace(e, c * GaussRational(Rational(0), Rational(e[j - 1])));
  }
  return p;
}

TrigPoly TrigPoly::conjugate() const {
  TrigPoly p(nvars_);
  Exp neg(nvars_);
  for (auto& [e, c] : terms_) {
    for (int k = 0; k < nvars_; ++k) neg[k] = -e[k];
    p.terms_[neg] = c.conj();
  }
  return p;
}

GaussRational TrigPoly::evalAtZero() const {
  GaussRational s;
  for (auto& [e, c] : terms_) s += c;
  return s;
}

std::complex<double> TrigPoly::evalAt(const std::vector<double>& t) const {
  std::complex<double> s(0, 0);
  for (auto& [e, c] : terms_) {
    double phase = 0;
    for (int k = 0; k < nvars_; ++k) phase += e[k] * t[k];
    std::complex<double> coeff(c.re.get_d(), c.im.get_d());
    s += coeff * std::polar(1.0, phase);
  }
  return s;
}

TrigPoly TrigPoly::permuteVars(const std::vector<int>& w) const {
  if ((int)w.size() != nvars_) throw std::invalid_argument("permuteVars: size");
  TrigPoly p(nvars_);
  Exp f(nvars_);
  for (auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (int k = 0; k < nvars_; ++k) f[w[k] - 1] = e[k];
    p.addTerm(f, c);
  }
  return p;
}

TrigPoly TrigPoly::negateVar(int j) const {
  TrigPoly p(nvars_);
  Exp f(nvars_);
  for (auto& [e, c] : terms_) {
    f = e;
    f[j - 1] = -f[j - 1];
    p.addTerm(f, c);
  }
  return p;
}

namespace {

// Componentwise minimum of the support, used to shift a Laurent polynomial
// into the ordinary polynomial ring.
std::vector<int> minExponents(const TrigPoly& p) {
  std::vector<int> mn(p.nvars(), 0);
  bool first = true;
  for (auto& [e, c] : p.terms()) {
    if (first) {
      mn = e;
      first = false;
    } else {
      for (int k = 0; k < p.nvars(); ++k) mn[k] = std::min(mn[k], e[k]);
    }
  }
  return mn;
}

TrigPoly shiftExponents(const TrigPoly& p, const std::vector<int>& d) {
  TrigPoly q(p.nvars());
  TrigPoly::Exp e2(p.nvars());
  for (auto& [e, c] : p.terms()) {
    for (int k = 0; k < p.nvars(); ++k) e2[k] = e[k] + d[k];
    q += TrigPoly::monomial(p.nvars(), e2, c);
  }
  return q;
}

bool expDivides(const TrigPoly::Exp& a, const TrigPoly::Exp& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (b[k] < a[k]) return false;
  return true;
}

}  // namespace

TrigPoly TrigPoly::exactDiv(const TrigPoly& num, const TrigPoly& den) {
  if (den.isZero()) throw std::domain_error("exactDiv: zero divisor");
  if (num.isZero()) return zero(num.nvars_);
  if (num.nvars_ != den.nvars_) throw std::invalid_argument("exactDiv: mixed variable counts");
  const int n = num.nvars_;

  // Both factors shifted so the lowest exponent per variable is zero. In the
  // Laurent ring min-exponents are additive under multiplication, so the
  // shifted quotient is again an ordinary polynomial.
  std::vector<int> mnN = minExponents(num), mnD = minExponents(den);
  std::vector<int> shiftN(n), shiftD(n), shiftQ(n);
  for (int k = 0; k < n; ++k) {
    shiftN[k] = -mnN[k];
    shiftD[k] = -mnD[k];
    shiftQ[k] = mnN[k] - mnD[k];
  }
  TrigPoly r = shiftExponents(num, shiftN);
  TrigPoly d = shiftExponents(den, shiftD);

  TrigPoly q(n);
  const Exp& ltD = d.leadingExp();
  const GaussRational lcD = d.terms().rbegin()->second;
  Exp e(n);
  while (!r.isZero()) {
    const Exp& ltR = r.leadingExp();
    if (!expDivides(ltD, ltR))
      throw NonDivisibleError("exactDiv: remainder is nonzero");
    for (int k = 0; k < n; ++k) e[k] = ltR[k] - ltD[k];
    GaussRational c = r.terms().rbegin()->second / lcD;
    TrigPoly t = monomial(n, e, c);
    q += t;
    r -= t * d;
  }
  return shiftExponents(q, shiftQ);
}

CosPoly TrigPoly::toCos() const {
  CosPoly out(nvars_);
  TrigPoly r = *this;
  while (!r.isZero()) {
    const Exp& lt = r.leadingExp();
    for (int k = 0; k < nvars_; ++k)
      if (lt[k] < 0) throw NotCosPolynomialError("toCos: not a polynomial in cosines");
    GaussRational c = r.terms().rbegin()->second;
    if (!c.isReal()) throw NotCosPolynomialError("toCos: non-real leading coefficient");
    long deg = 0;
    for (int k = 0; k < nvars_; ++k) deg += lt[k];
    // prod cos^{e_k} t_k has z^{lt} coefficient 2^{-deg}
    Rational coeff = c.re;
    for (long s = 0; s < deg; ++s) coeff *= 2;
    out += CosPoly::monomial(nvars_, lt, coeff);
    r -= CosPoly::monomial(nvars_, lt, coeff).toTrig();
  }
  return out;
}

CosPoly CosPoly::monomial(int nvars, const Exp& e, const Rational& c) {
  CosPoly p(nvars);
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

CosPoly& CosPoly::operator+=(const CosPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("CosPoly: mixed variable counts");
  for (auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

CosPoly operator*(const CosPoly& a, const CosPoly& b) {
  CosPoly p(a.nvars_);
  CosPoly::Exp e(a.nvars_);
  for (auto& [ea, ca] : a.terms_) {
    for (auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      p += CosPoly::monomial(a.nvars_, e, ca * cb);
    }
  }
  return p;
}

TrigPoly CosPoly::toTrig() const {
  TrigPoly p = TrigPoly::zero(nvars_);
  for (auto& [e, c] : terms_) {
    TrigPoly m = TrigPoly::constant(nvars_, GaussRational(c));
    for (int k = 0; k < nvars_; ++k)
      if (e[k] > 0) m = m * TrigPoly::cosT(nvars_, k + 1).pow(e[k]);
    p += m;
  }
  return p;
}

TrigPoly cosProduct(int nvars, const std::vector<int>& indices) {
  TrigPoly p = TrigPoly::one(nvars);
  for (int j : indices) p = p * TrigPoly::cosT(nvars, j);
  return p;
}

TrigPoly cosMonomial(const std::vector<int>& exps) {
  int n = (int)exps.size();
  TrigPoly p = TrigPoly::one(n);
  for (int k = 0; k < n; ++k)
    if (exps[k] > 0) p = p * TrigPoly::cosT(n, k + 1).pow(exps[k]);
  return p;
}

TrigPoly psiElem(int nvars, int i, const std::vector<int>& excluded) {
  std::vector<bool> out(nvars + 1, false);
  for (int j : excluded) out[j] = true;
  std::vector<int> avail;
  for (int j = 1; j <= nvars; ++j)
    if (!out[j]) avail.push_back(j);
  if (i < 0 || i > (int)avail.size()) return TrigPoly::zero(nvars);
  if (i == 0) return TrigPoly::one(nvars);

  // Elementary symmetric polynomial in cos^2 t_j, j in avail, via the
  // one-variable-at-a-time recurrence e_i(x_1..x_k) = e_i + x_k e_{i-1}.
  std::vector<TrigPoly> e(i + 1, TrigPoly::zero(nvars));
  e[0] = TrigPoly::one(nvars);
  for (int j : avail) {
    TrigPoly c2 = TrigPoly::cosT(nvars, j).pow(2);
    for (int d = std::min<int>(i, (int)e.size() - 1); d >= 1; --d) e[d] += c2 * e[d - 1];
  }
  return e[i];
}

}  // namespace mvsf
