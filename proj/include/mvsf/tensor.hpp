#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mvsf/bottoms.hpp"
#include "mvsf/trigpoly.hpp"
#include "mvsf/weights.hpp"

namespace mvsf {

// Basis vector of a wedge power of C^N, stored as an index bitmask
// (index j <-> bit j-1). All wedge signs are tracked at construction.
using WedgeMask = std::uint32_t;

inline int maskSize(WedgeMask m) { return __builtin_popcount(m); }
WedgeMask maskFromList(const std::vector<int>& idx);
std::vector<int> listFromMask(WedgeMask m);

// e_{l_1} ^ e_{l_2} ^ ... for an arbitrary index list: the sorted mask and
// the sorting sign; sign = 0 when an index repeats.
std::pair<WedgeMask, int> wedgeOfList(const std::vector<int>& idx);

// E_{pq} acting as a derivation on a wedge basis vector; returns the image
// mask and sign, or sign 0 when the image vanishes.
std::pair<WedgeMask, int> wedgeDerivation(WedgeMask S, int p, int q);

// Element of a tensor product of wedge powers of C^{n+m}.
class TensorVector {
 public:
  using Key = std::vector<WedgeMask>;
  using TermMap = std::map<Key, GaussRational>;

  TensorVector() = default;
  TensorVector(RankPair g, std::vector<int> factorDegrees)
      : g_(g), degrees_(std::move(factorDegrees)) {}

  const RankPair& g() const { return g_; }
  const std::vector<int>& factorDegrees() const { return degrees_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void addTerm(const Key& k, const GaussRational& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator*=(const GaussRational& c);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.degrees_ == b.degrees_ && a.terms_ == b.terms_;
  }

  // Tensor product (factor lists concatenate).
  friend TensorVector tensor(const TensorVector& a, const TensorVector& b);

  // Derivation action of E_{pq} in gl(n+m) across all factors.
  TensorVector applyE(int p, int q) const;

 private:
  RankPair g_{1, 1};
  std::vector<int> degrees_;
  TermMap terms_;
};

// Hermitian inner product with the wedge monomials orthonormal.
GaussRational gram(const TensorVector& v, const TensorVector& w);

// Matrix element <pi(a_t) e_S, e_T> of a single wedge factor, as a
// trigonometric polynomial in t_1..t_n. The torus element acts by
//   e_k      -> cos t_k e_k + i sin t_k e_{N+1-k}   (k <= n)
//   e_k      -> e_k                                 (n < k <= m)
//   e_{N+1-k}-> i sin t_k e_k + cos t_k e_{N+1-k}   (k <= n).
TrigPoly torusMinor(const RankPair& g, WedgeMask S, WedgeMask T);

// <pi(a_t) v, w> extended multiplicatively over tensor factors.
TrigPoly matElem(const TensorVector& v, const TensorVector& w);

// The (n+m) x (n+m) matrix of a_t over TrigPoly (column k = image of e_k).
std::vector<std::vector<TrigPoly>> torusMatrix(const RankPair& g);

// --- explicit K-intertwiner embeddings ---------------------------------

// v^{H,k} in wedge^{s+u} (x) wedge^{N-u}: the signed sum over P in N, Q in M.
TensorVector vHk(const RankPair& g, int s, int u, const std::vector<int>& H, int k);

// K-fixed vector v'_i in wedge^i (x) wedge^{N-i}.
TensorVector kFixedVector(const RankPair& g, int i);

// w_i in wedge^i (x) wedge^{N+1-i} (first index pinned to e_1).
TensorVector rankOneWFactor(const RankPair& g, int i);

// Highest weight vector for the RankOne family: product of w_i factors per
// the composition, times (e_N)^{(x) b}.
TensorVector rankOneHighestVector(const RankPair& g, const std::vector<int>& composition, int b);

// Wedge-family embedding of e_H (x) (e_N)^b determined by the run pattern
// (x_k, y_k) and spherical degrees d, including the (v'_i)^{(x) d_i} tail.
TensorVector wedgeEmbedding(const RankPair& g, const std::vector<std::pair<int, int>>& runs,
                            const std::vector<int>& degrees, int b, const std::vector<int>& H);

// M-type basis labels for V_mu^K: subsets H (sorted lists) for the Wedge
// family, compositions of a for the RankOne family; the first label is
// {1..s} resp. (a,0,..,0).
struct MTypeBasis {
  MuSpec mu;
  std::vector<std::vector<int>> labels;

  static MTypeBasis build(const MuSpec& mu);
  int dim() const { return (int)labels.size(); }
  int indexOf(const std::vector<int>& label) const;
};

// Images j(v_label) for every basis label, generated from the highest
// vector by the lowering operators of the upper K block and matched against
// the same lowerings in the abstract model. Throws if the orbit does not
// close at dim V_mu^K.
std::map<std::vector<int>, TensorVector> lowerOrbit(const TensorVector& highest,
                                                    const MuSpec& mu);

// Closed forms for the approximant entries of the Wedge family.
// Ladder entry: cos t_H cos^b t_N psi_i^{(H)}.
TrigPoly qLadderEntry(const MuSpec& mu, int i, const std::vector<int>& H);
// General entry: cos t_H cos^b t_N prod psi_i^{d_i} * sum over permutations
// of block-excluded psi factors, determined by the run pattern.
TrigPoly qLambdaHEntry(const MuSpec& mu, const std::vector<std::pair<int, int>>& runs,
                       const std::vector<int>& degrees, const std::vector<int>& H);

}  // namespace mvsf
