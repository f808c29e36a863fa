#include "mvsf/weights.hpp"

#include <sstream>

namespace mvsf {

Weight Weight::fundamental(int N, int i) {
  std::vector<long> a(N - 1, 0);
  if (i < 0 || i > N) throw std::out_of_range("Weight::fundamental: index");
  if (i >= 1 && i <= N - 1) a[i - 1] = 1;
  return Weight(N, std::move(a));
}

long Weight::omegaCoeff(int i) const {
  if (i < 1 || i > N_ - 1) return 0;
  return omega_[i - 1];
}

std::vector<Rational> Weight::eps() const {
  std::vector<Rational> v(N_, Rational(0));
  // sum a_i omega_i with omega_i = (e_1+..+e_i) - (i/N) sum e_k
  Rational mean(0);
  for (int i = 1; i <= N_ - 1; ++i) {
    if (omega_[i - 1] == 0) continue;
    for (int k = 0; k < i; ++k) v[k] += omega_[i - 1];
    mean += Rational(omega_[i - 1]) * rat(i, N_);
  }
  for (auto& x : v) x -= mean;
  return v;
}

bool Weight::isDominant() const {
  for (long a : omega_)
    if (a < 0) return false;
  return true;
}

bool Weight::isZero() const {
  for (long a : omega_)
    if (a != 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  if (N_ != o.N_) throw std::invalid_argument("Weight: rank mismatch");
  std::vector<long> a(omega_);
  for (int k = 0; k < N_ - 1; ++k) a[k] += o.omega_[k];
  return Weight(N_, std::move(a));
}

Weight Weight::operator-(const Weight& o) const {
  if (N_ != o.N_) throw std::invalid_argument("Weight: rank mismatch");
  std::vector<long> a(omega_);
  for (int k = 0; k < N_ - 1; ++k) a[k] -= o.omega_[k];
  return Weight(N_, std::move(a));
}

Weight Weight::operator*(long k) const {
  std::vector<long> a(omega_);
  for (auto& x : a) x *= k;
  return Weight(N_, std::move(a));
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < N_ - 1; ++k) {
    if (k) os << ",";
    os << omega_[k];
  }
  os << "]";
  return os.str();
}

std::vector<Rational> omegaInEps(int N, int i) {
  if (i < 1 || i > N - 1) throw std::out_of_range("omegaInEps: index");
  return Weight::fundamental(N, i).eps();
}

Rational inner(const Weight& a, const Weight& b) {
  if (a.N() != b.N()) throw std::invalid_argument("inner: rank mismatch");
  auto va = a.eps(), vb = b.eps();
  Rational s(0);
  for (int k = 0; k < a.N(); ++k) s += va[k] * vb[k];
  return s;
}

Weight rho(int N) { return Weight(N, std::vector<long>(N - 1, 1)); }

Rational casimirEigenvalue(const Weight& lambda) {
  return inner(lambda, lambda) + 2 * inner(lambda, rho(lambda.N()));
}

std::vector<Rational> alphaCoords(const Weight& w) {
  auto v = w.eps();
  std::vector<Rational> c(w.N() - 1, Rational(0));
  Rational run(0);
  for (int k = 0; k < w.N() - 1; ++k) {
    run += v[k];
    c[k] = run;
  }
  return c;
}

bool dominanceLeq(const Weight& lo, const Weight& hi) {
  if (lo.N() != hi.N()) throw std::invalid_argument("dominanceLeq: rank mismatch");
  auto c = alphaCoords(hi - lo);
  for (auto& x : c) {
    if (x < 0) return false;
    if (x.get_den() != 1) return false;
  }
  return true;
}

Integer weylDim(const Weight& lambda) {
  if (!lambda.isDominant()) throw std::invalid_argument("weylDim: non-dominant weight");
  auto l = (lambda + rho(lambda.N())).eps();
  Rational num(1), den(1);
  for (int i = 0; i < lambda.N(); ++i) {
    for (int j = i + 1; j < lambda.N(); ++j) {
      num *= l[i] - l[j];
      den *= Rational(j - i);
    }
  }
  Rational d = num / den;
  if (d.get_den() != 1) throw std::logic_error("weylDim: non-integral result");
  return d.get_num();
}

std::vector<long> restrictToA(const RankPair& g, const Weight& w) {
  const int N = g.N();
  if (w.N() != N) throw std::invalid_argument("restrictToA: rank mismatch");
  for (int i = g.n + 1; i <= g.m - 1; ++i)
    if (w.omegaCoeff(i) != 0)
      throw std::invalid_argument("restrictToA: weight outside the folded lattice");
  // omega_i and omega_{N-i} both restrict to i (t_1 + .. + t_i), i <= n.
  std::vector<long> folded(g.n + 1, 0);
  for (int i = 1; i <= N - 1; ++i) {
    int f = std::min(i, N - i);
    if (f <= g.n) folded[f] += w.omegaCoeff(i);
  }
  std::vector<long> coeffs(g.n, 0);
  for (int j = 1; j <= g.n; ++j) {
    long s = 0;
    for (int i = j; i <= g.n; ++i) s += folded[i];
    coeffs[j - 1] = s;
  }
  return coeffs;
}

Weight sphericalGenerator(const RankPair& g, int i) {
  if (i < 1 || i > g.n) throw std::out_of_range("sphericalGenerator: index");
  return Weight::fundamental(g.N(), i) + Weight::fundamental(g.N(), g.N() - i);
}

}  // namespace mvsf
