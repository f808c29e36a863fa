#pragma once

#include <memory>
#include <vector>

#include "mvsf/bottoms.hpp"
#include "mvsf/qmatrix.hpp"
#include "mvsf/tensor.hpp"
#include "mvsf/trigpoly.hpp"

namespace mvsf {

struct NonBlockDiagonalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInSpanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagonal End_M(V_mu^K)-valued function on the torus: one entry per
// M-type basis label, in MTypeBasis order.
struct DiagFunc {
  std::vector<TrigPoly> entries;

  static DiagFunc zeros(int dim, int nvars) {
    return DiagFunc{std::vector<TrigPoly>(dim, TrigPoly::zero(nvars))};
  }
  int dim() const { return (int)entries.size(); }

  DiagFunc& operator+=(const DiagFunc& o);
  DiagFunc& operator-=(const DiagFunc& o);
  friend DiagFunc operator+(DiagFunc a, const DiagFunc& b) { return a += b; }
  friend DiagFunc operator-(DiagFunc a, const DiagFunc& b) { return a -= b; }
  DiagFunc scaled(const GaussRational& c) const;
  DiagFunc entrywise(const TrigPoly& p) const;
  friend bool operator==(const DiagFunc& a, const DiagFunc& b) {
    return a.entries == b.entries;
  }
  bool isZero() const;
};

// One positive restricted root with everything the radial operator needs:
// its trigonometric data and the representation matrices of the root-vector
// pairs above it.
struct RestrictedRootTerm {
  enum class Kind { Short, MiddleMinus, MiddlePlus, Long };
  Kind kind;
  int j = 0, k = 0;  // variable indices (k only for middle roots)
  // pi_mu^K matrices of (X_alpha, X_{-alpha}) for each Phi-root above;
  // short-root pairs are stored rescaled by sqrt(2)^{+-1} so the entries
  // stay rational, which leaves every product X_alpha X_{-alpha} unchanged.
  std::vector<std::pair<QMatrix, QMatrix>> pairs;
};

// Ad(u*) X_{+-alpha} as (n+m)x(n+m) matrices for all positive restricted
// roots, verified block diagonal; throws NonBlockDiagonalError otherwise.
// Matrices use the same rescaling convention as RestrictedRootTerm.
struct XAlphaPair {
  RestrictedRootTerm::Kind kind;
  int j, k;
  QMatrix plus, minus;
};
std::vector<XAlphaPair> buildXAlpha(const RankPair& g);

// Action of a block-diagonal Lie algebra element on V_mu^K in the M-type
// basis: the upper block acts on the wedge/symmetric model, the determinant
// twist contributes b tr(A), the lower block acts trivially.
QMatrix piMu(const MuSpec& mu, const QMatrix& blockDiagElement);

// Closed-form scalar of the m-part Casimir for the Wedge family.
Rational omegaMScalarWedge(const MuSpec& mu);

// Radial part of the Casimir operator on DiagFunc. Construction does all
// the per-mu work (root data, representation matrices, m-part scalars);
// apply() is const and safe to call concurrently afterwards.
class RadialOperator {
 public:
  explicit RadialOperator(const MuSpec& mu);

  const MuSpec& mu() const { return mu_; }
  const MTypeBasis& basis() const { return basis_; }
  // per-label m-part scalars (constant diagonal for the Wedge family)
  const std::vector<Rational>& mScalars() const { return mScalars_; }

  DiagFunc apply(const DiagFunc& F) const;

 private:
  DiagFunc applyRootParts(const DiagFunc& F) const;

  MuSpec mu_;
  MTypeBasis basis_;
  std::vector<RestrictedRootTerm> roots_;
  std::vector<Rational> mScalars_;
};

// Convenience wrapper constructing the operator on the fly.
DiagFunc applyRadial(const MuSpec& mu, const DiagFunc& F);

// Exact coefficients of G over a list of basis functions, by solving the
// sparse linear system on Laurent coefficients; throws NotInSpanError when
// no exact representation exists.
std::vector<GaussRational> expandInBasis(const DiagFunc& G, const std::vector<DiagFunc>& basis);

}  // namespace mvsf
