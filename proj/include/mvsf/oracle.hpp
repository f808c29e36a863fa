#pragma once

#include <map>

#include "mvsf/bottoms.hpp"
#include "mvsf/tensor.hpp"

namespace mvsf {

struct DimensionCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight multiplicities of one irreducible gl_k module, keyed by integer
// weight vectors of length k.
struct CharacterTable {
  int rank = 0;
  std::map<std::vector<long>, Integer> mult;

  Integer total() const;
  Integer at(const std::vector<long>& w) const;
};

// Freudenthal recursion for gl_k with a weakly decreasing integer highest
// weight; throws DimensionCapError beyond the cap.
CharacterTable freudenthal(int rank, const std::vector<long>& highest,
                           long dimensionCap = 100000);

// Partition-style integer vector of an SU(N) dominant weight (last entry 0).
std::vector<long> glPartition(const Weight& lambda);

// Multiplicity of V_mu^K in V_lambda^G by character restriction and
// leading-term peeling over the block subgroup.
long branchMultiplicity(const RankPair& g, const Weight& lambda, const MuSpec& mu,
                        long dimensionCap = 100000);

// Full K-type decomposition of V_lambda^G: highest weights (as integer
// block vectors, normalized to end at zero) with multiplicities.
std::vector<std::pair<std::vector<long>, long>> kTypeDecomposition(
    const RankPair& g, const Weight& lambda, long dimensionCap = 100000);

// Verify wedge (x) wedge tensor decomposition
//   V_{omega_c} (x) V_{omega_{N-d}} = sum_i V_{omega_{c-i} + omega_{N-d+i}}.
bool tensorCheckGdec(const RankPair& g, int c, int d, long dimensionCap = 100000);

// Pairwise distinctness of the M-torus characters of the M-type basis.
bool mTypeCheck(const MuSpec& mu);

}  // namespace mvsf
