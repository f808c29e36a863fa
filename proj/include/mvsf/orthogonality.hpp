#pragma once

#include "mvsf/spherical.hpp"

namespace mvsf {

struct ReductionFailedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial in l_j = cos^2 t_j with rational coefficients.
class LPoly {
 public:
  using Exp = std::vector<int>;
  using TermMap = std::map<Exp, Rational>;

  LPoly() : nvars_(0) {}
  explicit LPoly(int nvars) : nvars_(nvars) {}
  static LPoly constant(int nvars, const Rational& c);
  static LPoly monomial(int nvars, const Exp& e, const Rational& c);
  // conversion from an all-even cosine polynomial; throws
  // ReductionFailedError when an odd power survives
  static LPoly fromEvenCos(const CosPoly& p);
  static LPoly fromTrig(const TrigPoly& p) { return fromEvenCos(p.toCos()); }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly scaled(const Rational& c) const;
  LPoly pow(long k) const;
  friend bool operator==(const LPoly& a, const LPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // integral over the unit cube, term by term
  Rational integrate01() const;
  Rational evalAt(const std::vector<Rational>& l) const;
  double evalAt(const std::vector<double>& l) const;
  int maxDegree(int var) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Elementary symmetric polynomial in the l_j outside the excluded set.
LPoly psiL(int nvars, int i, const std::vector<int>& excluded = {});

// Selberg normalization: c_1^{-1} is the integral of |delta|.
Rational selbergC1(const RankPair& g);

// The density delta(a_t) as an exact trigonometric polynomial.
TrigPoly densityDelta(const RankPair& g);

// (1-l_1)^{m-n} ... (1-l_n)^{m-n} * prod_{i<j} (l_i - l_j)^2.
LPoly orthWeightPoly(const RankPair& g);

// Exact Schur pairing 4^n c_1 int tr(Phi Psi^*) weight dl.
Rational exactInner(const MuSpec& mu, const DiagFunc& phi, const DiagFunc& psi);

// Gauss--Jacobi cross-check of exactInner; order = points per variable.
double floatInner(const MuSpec& mu, const DiagFunc& phi, const DiagFunc& psi, int order);
int suggestedQuadOrder(const MuSpec& mu, const DiagFunc& phi, const DiagFunc& psi);

// Matrix of approximants for mu = omega_1 + b omega_n (rows = rungs,
// columns = M-type labels) and the weight S = Q Q^*.
struct MatrixWeight {
  std::vector<std::vector<TrigPoly>> Q;
  std::vector<std::vector<LPoly>> S;
};
MatrixWeight buildMatrixWeight(const MuSpec& mu);

// S matches both closed forms entrywise; throws std::runtime_error naming
// the offending entry otherwise.
void checkWeightClosedForms(const MuSpec& mu, const MatrixWeight& w);

// det S = psi_n^{nb+1} prod_{i<j} (l_j - l_i)^2 and the corresponding
// determinant identity for Q. The exponent nb+1 is forced by the entrywise
// closed forms; the b+1 variant below holds only for n = 1 or b = 0.
bool detSCheck(const MuSpec& mu, const MatrixWeight& w);
bool detSCheckLiteral(const MuSpec& mu, const MatrixWeight& w);

// Commutant checks: {A : A S = S A} = C I and {A : A S = S A^*} = R I.
bool indecomposableCheck(const MuSpec& mu, const MatrixWeight& w);

// Positive semidefiniteness of S at a rational sample point, by exact
// principal minors.
bool weightPsdAt(const MatrixWeight& w, const std::vector<Rational>& l);

// Full Gram matrix of the solved spherical functions up to a degree bound,
// with the expected diagonal (dim V_mu^K)^2 / dim V_lambda^G.
struct GramReport {
  std::vector<SpectrumLabel> labels;
  std::vector<std::vector<Rational>> gram;
  std::vector<Rational> expected;
  double maxFloatRelError = 0.0;  // only when float checks were requested
  double maxFloatCrossError = 0.0;
  bool diagonalMatches = true;
};
GramReport schurGram(const MuSpec& mu, int degreeBound, bool withFloat);

}  // namespace mvsf
