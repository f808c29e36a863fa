#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mvsf/gauss_rational.hpp"

namespace mvsf {

// Block sizes of the symmetric pair: G = SU(n+m), K = S(U(n) x U(m)),
// with m >= n >= 1.
struct RankPair {
  int n;
  int m;

  RankPair(int n_, int m_) : n(n_), m(m_) {
    if (n < 1 || m < n) throw std::invalid_argument("RankPair: need m >= n >= 1");
  }
  int N() const { return n + m; }

  friend bool operator==(const RankPair& a, const RankPair& b) {
    return a.n == b.n && a.m == b.m;
  }
};

// Integral weight of A_{N-1} in fundamental-weight coordinates. The epsilon
// coordinates (length N, rational, summing to zero) are derived on demand.
class Weight {
 public:
  Weight() : N_(2), omega_(1, 0) {}
  Weight(int N, std::vector<long> omega) : N_(N), omega_(std::move(omega)) {
    if ((int)omega_.size() != N_ - 1) throw std::invalid_argument("Weight: coordinate size");
  }
  static Weight zero(int N) { return Weight(N, std::vector<long>(N - 1, 0)); }
  // omega_i, 1-based; omega_0 and omega_N are the zero weight.
  static Weight fundamental(int N, int i);

  int N() const { return N_; }
  const std::vector<long>& omega() const { return omega_; }
  long omegaCoeff(int i) const;  // 1-based, 0 outside 1..N-1

  std::vector<Rational> eps() const;

  bool isDominant() const;
  bool isZero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(long k) const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.N_ == b.N_ && a.omega_ == b.omega_;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.omega_ < b.omega_; }

  std::string str() const;

 private:
  int N_;
  std::vector<long> omega_;
};

// Epsilon coordinates of omega_i: (e_1+..+e_i) - (i/N) * sum_k e_k.
std::vector<Rational> omegaInEps(int N, int i);

// Euclidean pairing in epsilon coordinates.
Rational inner(const Weight& a, const Weight& b);

// Half sum of positive roots: all fundamental coordinates equal to one.
Weight rho(int N);

// <lambda, lambda> + 2 <lambda, rho>.
Rational casimirEigenvalue(const Weight& lambda);

// Coordinates of a weight in the simple-root basis (prefix sums of the
// epsilon coordinates); rational in general.
std::vector<Rational> alphaCoords(const Weight& w);

// lo <= hi in the dominance order: hi - lo is a nonnegative *integral*
// combination of simple roots.
bool dominanceLeq(const Weight& lo, const Weight& hi);
inline bool dominanceLt(const Weight& lo, const Weight& hi) {
  return lo != hi && dominanceLeq(lo, hi);
}

// Dimension of the irreducible with highest weight lambda (Weyl formula).
Integer weylDim(const Weight& lambda);

// Restriction to the torus A: coefficient vector of i*t_j, j = 1..n.
// Defined on the sublattice spanned by omega_1..omega_n and
// omega_m..omega_{N-1}; throws otherwise.
std::vector<long> restrictToA(const RankPair& g, const Weight& w);

// lambda_i = omega_i + omega_{N-i}, the spherical generators.
Weight sphericalGenerator(const RankPair& g, int i);

}  // namespace mvsf
