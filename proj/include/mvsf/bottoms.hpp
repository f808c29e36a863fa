#pragma once

#include <optional>
#include <vector>

#include "mvsf/weights.hpp"

namespace mvsf {

// K-type family selector. RankOne(a,b) is mu = a*omega_1 + b*omega_n,
// Wedge(s,b) is mu = omega_s + b*omega_n; RankOne(1,b) and Wedge(1,b) name
// the same representation.
struct MuSpec {
  enum class Family { RankOne, Wedge };

  RankPair g;
  Family family;
  int p1;  // a for RankOne, s for Wedge
  int b;

  static MuSpec rankOne(RankPair g, int a, int b);
  static MuSpec wedge(RankPair g, int s, int b);

  bool isRankOne() const { return family == Family::RankOne; }
  Weight muWeight() const;
  long dimVmuK() const;  // C(a+n-1,n-1) resp. C(n,s)
  std::string str() const;
};

// One generator of the bottom set together with the combinatorial data the
// intertwiner constructions need.
struct BottomElement {
  Weight weight;
  // RankOne: composition (a_1..a_n) with sum a. Wedge: the subset H of
  // {1..n} (sorted) plus its decomposition into maximal runs (x_k, y_k),
  // meaning H contains exactly the blocks {y_k+1..x_k}.
  std::vector<int> composition;
  std::vector<int> subsetH;
  std::vector<std::pair<int, int>> runs;  // (x_k, y_k)
};

// Spectrum label: bottom element plus spherical degrees d in N^n.
struct SpectrumLabel {
  BottomElement bottom;
  std::vector<int> degrees;
  Weight total;
  Rational eigenvalue;  // casimirEigenvalue(total)

  long degreeSum() const {
    long s = 0;
    for (int d : degrees) s += d;
    return s;
  }
};

// Maximal-run decomposition of a sorted subset H of {1..n}: each run
// {p..q} contributes (x, y) = (q, p-1).
std::vector<std::pair<int, int>> runDecomposition(const std::vector<int>& H);

// Bottom weight for a subset H of {1..n} (Wedge family).
Weight lambdaH(const MuSpec& mu, const std::vector<int>& H);

// Bottom of the spectrum for each family, in the deterministic order
// (eigenvalue, then lexicographic omega coordinates).
std::vector<BottomElement> bottomSet(const MuSpec& mu);

// All labels with |d| <= degreeBound, sorted compatibly with dominance
// (eigenvalue ascending, ties by omega coordinates).
std::vector<SpectrumLabel> enumeratePgMu(const MuSpec& mu, int degreeBound);

// Membership test for the extended weight monoid description of the
// RankOne spectrum: (lambda, mu) must be an N-combination of the standard
// generator pairs.
bool extendedMonoidCheck(const MuSpec& mu, const Weight& lambda);

// All labels lambda' <= lambda (dominance) in the spectrum of mu. The
// degree search is cut off by the alpha_1 coordinate, which is monotone.
std::vector<SpectrumLabel> dominanceIdeal(const MuSpec& mu, const Weight& lambda);

}  // namespace mvsf
