#pragma once

#include <map>
#include <memory>
#include <vector>

#include "mvsf/casimir.hpp"

namespace mvsf {

struct EigenspaceNotOneDimensional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Zonal spherical function phi_i as an exact cosine polynomial together
// with its coefficients over the psi basis.
struct ZonalForm {
  std::vector<Rational> coeffs;  // phi_i = sum_j coeffs[j] psi_j
  TrigPoly func;
};
ZonalForm zonalPhi(const RankPair& g, int i);

struct FBasisElement {
  SpectrumLabel label;
  DiagFunc func;
};

struct SphericalFunction {
  SpectrumLabel label;
  DiagFunc entries;                        // normalized to the identity at t = 0
  Rational eigenvalue;
  std::vector<SpectrumLabel> span;         // dominance ideal used in the solve
  std::vector<GaussRational> expansion;    // coefficients over the ideal's F basis
};

// Per-mu pipeline: approximants, F basis and the triangular eigen-solve.
// All produced values are immutable; the instance itself memoizes bottom
// approximants without locking, so use one solver per thread.
class SphericalSolver {
 public:
  explicit SphericalSolver(MuSpec mu);

  const MuSpec& mu() const { return mu_; }
  const MTypeBasis& basis() const { return basis_; }
  const RadialOperator& radial() const { return radial_; }

  // Approximant of a bottom element as a diagonal function, one entry per
  // M-type label. Wedge entries use the closed forms (normalized so the
  // single-run case reduces to the ladder entries); rank-one entries come
  // from the intertwiner engine with value 1 at t = 0.
  const DiagFunc& bottomApproximant(const BottomElement& nu) const;

  DiagFunc fBasisFunc(const SpectrumLabel& label) const;
  std::vector<FBasisElement> buildFBasis(int degreeBound) const;

  SphericalFunction solve(const SpectrumLabel& label) const;
  SphericalFunction solve(const Weight& total) const;

 private:
  MuSpec mu_;
  MTypeBasis basis_;
  RadialOperator radial_;
  mutable std::map<std::vector<long>, DiagFunc> bottomCache_;
};

// Entry for the M-type label H obtained from the first entry by the
// reduced-Weyl-group substitution t_j -> t_{w(j)}.
TrigPoly weylFill(const MuSpec& mu, const TrigPoly& firstEntry, const std::vector<int>& H);

// Generators s_1..s_n of the reduced Weyl group as exact matrices.
std::vector<QMatrix> weylGenerators(const RankPair& g);

// Quadratic, commuting and braid relations, plus the torus conjugation
// property of the generators. Returns true when all identities hold.
bool braidCheck(const RankPair& g);

}  // namespace mvsf
