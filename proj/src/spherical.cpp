#include "mvsf/spherical.hpp"

#include <algorithm>

namespace mvsf {

ZonalForm zonalPhi(const RankPair& g, int i) {
  if (i < 0 || i > g.n) throw std::out_of_range("zonalPhi: index");
  const int n = g.n, m = g.m;
  // k_j = (-1)^j (i+1-j)_j (m+n+2-i-j)_j / ((n+1-j)_j)^2, k_0 = 1,
  // l = (-1)^i (-n)_i / (-m)_i
  Rational l = pochhammer(Rational(-n), i) / pochhammer(Rational(-m), i);
  if (i % 2 != 0) l = -l;
  ZonalForm out;
  out.coeffs.assign(g.n + 1, Rational(0));
  out.func = TrigPoly::zero(n);
  for (int j = 0; j <= i; ++j) {
    Rational kj = pochhammer(Rational(i + 1 - j), j) * pochhammer(Rational(m + n + 2 - i - j), j);
    Rational den = pochhammer(Rational(n + 1 - j), j);
    kj /= den * den;
    if (j % 2 != 0) kj = -kj;
    out.coeffs[j] = l * kj;
    out.func += psiElem(n, j) * GaussRational(out.coeffs[j]);
  }
  return out;
}

SphericalSolver::SphericalSolver(MuSpec mu)
    : mu_(std::move(mu)), basis_(MTypeBasis::build(mu_)), radial_(mu_) {}

const DiagFunc& SphericalSolver::bottomApproximant(const BottomElement& nu) const {
  auto it = bottomCache_.find(nu.weight.omega());
  if (it != bottomCache_.end()) return it->second;

  const int n = mu_.g.n;
  DiagFunc q = DiagFunc::zeros(basis_.dim(), n);
  if (mu_.isRankOne()) {
    auto images = lowerOrbit(rankOneHighestVector(mu_.g, nu.composition, mu_.b), mu_);
    for (int i = 0; i < basis_.dim(); ++i) {
      const TensorVector& v = images.at(basis_.labels[i]);
      q.entries[i] = matElem(v, v) * (GaussRational(1) / gram(v, v));
    }
  } else {
    // permutation-sum entry divided by the block factorials, so a single
    // run gives exactly the ladder entry
    Rational scale(1);
    for (auto [x, y] : nu.runs) scale /= Rational(factorial(x - y));
    for (int i = 0; i < basis_.dim(); ++i) {
      q.entries[i] = qLambdaHEntry(mu_, nu.runs, {}, basis_.labels[i]) * GaussRational(scale);
    }
  }
  return bottomCache_.emplace(nu.weight.omega(), std::move(q)).first->second;
}

DiagFunc SphericalSolver::fBasisFunc(const SpectrumLabel& label) const {
  TrigPoly psiProd = TrigPoly::one(mu_.g.n);
  for (int i = 1; i <= mu_.g.n; ++i)
    if (label.degrees[i - 1] > 0)
      psiProd = psiProd * psiElem(mu_.g.n, i).pow(label.degrees[i - 1]);
  return bottomApproximant(label.bottom).entrywise(psiProd);
}

std::vector<FBasisElement> SphericalSolver::buildFBasis(int degreeBound) const {
  std::vector<FBasisElement> out;
  for (auto& l : enumeratePgMu(mu_, degreeBound)) out.push_back({l, fBasisFunc(l)});

  // each element carries the restricted leading exponent of its label: the
  // largest lexicographic exponent over all entries, with dominance along
  // comparable pairs
  for (auto& e : out) {
    auto lead = restrictToA(mu_.g, e.label.total);
    std::vector<int> best;
    for (auto& entry : e.func.entries) {
      if (entry.isZero()) continue;
      std::vector<int> le = entry.leadingExp();
      if (best.empty() || le > best) best = le;
    }
    std::vector<int> leadInt(lead.begin(), lead.end());
    if (best != leadInt)
      throw std::logic_error("buildFBasis: leading exponent mismatch for " +
                             e.label.total.str());
  }
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (!dominanceLt(out[b].label.total, out[a].label.total)) continue;
      auto la = restrictToA(mu_.g, out[a].label.total);
      auto lb = restrictToA(mu_.g, out[b].label.total);
      long run = 0;
      bool equal = true;
      for (std::size_t j = 0; j < la.size(); ++j) {
        run += la[j] - lb[j];
        equal = equal && la[j] == lb[j];
        if (run < 0)
          throw std::logic_error("buildFBasis: restricted exponents not ordered");
      }
      if (equal) throw std::logic_error("buildFBasis: equal restricted exponents");
    }
  }
  return out;
}

SphericalFunction SphericalSolver::solve(const SpectrumLabel& label) const {
  auto ideal = dominanceIdeal(mu_, label.total);
  // the target label sorts last (strictly largest eigenvalue in its ideal)
  if (ideal.empty() || ideal.back().total != label.total)
    throw std::logic_error("solve: label not in its own ideal");
  const std::size_t K = ideal.size();
  for (std::size_t k = 0; k + 1 < K; ++k)
    if (ideal[k].eigenvalue == label.eigenvalue)
      throw EigenspaceNotOneDimensional("solve: eigenvalue collision in the ideal");

  std::vector<DiagFunc> F;
  F.reserve(K);
  for (auto& l : ideal) F.push_back(fBasisFunc(l));

  // columns of R on the F basis
  std::vector<std::vector<GaussRational>> M(K);
  for (std::size_t j = 0; j < K; ++j) {
    M[j] = expandInBasis(radial_.apply(F[j]), F);
    if (M[j][j] != GaussRational(ideal[j].eigenvalue))
      throw std::logic_error("solve: diagonal of R is not the eigenvalue");
  }

  // back substitution for (R - c) x = 0 with x_last = 1
  std::vector<GaussRational> x(K);
  x[K - 1] = GaussRational(1);
  for (int k = (int)K - 2; k >= 0; --k) {
    GaussRational s;
    for (std::size_t j = k + 1; j < K; ++j) s += M[j][k] * x[j];
    x[k] = s / GaussRational(label.eigenvalue - ideal[k].eigenvalue);
  }

  DiagFunc phi = DiagFunc::zeros(basis_.dim(), mu_.g.n);
  for (std::size_t k = 0; k < K; ++k) phi += F[k].scaled(x[k]);

  // normalize to the identity at t = 0
  GaussRational v0 = phi.entries[0].evalAtZero();
  for (auto& e : phi.entries)
    if (e.evalAtZero() != v0)
      throw std::logic_error("solve: value at the origin is not scalar");
  if (v0.isZero()) throw std::logic_error("solve: vanishing value at the origin");
  GaussRational inv = GaussRational(1) / v0;
  phi = phi.scaled(inv);
  for (auto& c : x) c *= inv;

  // exact eigenfunction check
  DiagFunc residual = radial_.apply(phi) - phi.scaled(GaussRational(label.eigenvalue));
  if (!residual.isZero()) throw std::logic_error("solve: not an eigenfunction");

  SphericalFunction out;
  out.label = label;
  out.entries = std::move(phi);
  out.eigenvalue = label.eigenvalue;
  out.span = std::move(ideal);
  out.expansion = std::move(x);
  return out;
}

SphericalFunction SphericalSolver::solve(const Weight& total) const {
  for (auto& l : dominanceIdeal(mu_, total))
    if (l.total == total) return solve(l);
  throw std::invalid_argument("solve: weight is not in the spectrum");
}

TrigPoly weylFill(const MuSpec& mu, const TrigPoly& firstEntry, const std::vector<int>& H) {
  const int n = mu.g.n;
  std::vector<int> w(n);
  std::vector<bool> used(n + 1, false);
  for (std::size_t j = 0; j < H.size(); ++j) {
    w[j] = H[j];
    used[H[j]] = true;
  }
  std::size_t pos = H.size();
  for (int v = 1; v <= n; ++v)
    if (!used[v]) w[pos++] = v;
  return firstEntry.permuteVars(w);
}

std::vector<QMatrix> weylGenerators(const RankPair& g) {
  const int n = g.n, N = g.N();
  std::vector<QMatrix> out;
  for (int i = 1; i <= n - 1; ++i) {
    QMatrix s(N, N);
    for (int d = 1; d <= N; ++d) s.at(d - 1, d - 1) = GaussRational(1);
    auto swap2 = [&](int a, int b) {
      s.at(a - 1, a - 1) = GaussRational(0);
      s.at(b - 1, b - 1) = GaussRational(0);
      s.at(a - 1, b - 1) = GaussRational(1);
      s.at(b - 1, a - 1) = GaussRational(1);
    };
    swap2(i, i + 1);
    swap2(N - i, N + 1 - i);  // mirrored block L P_i L
    out.push_back(std::move(s));
  }
  {
    QMatrix s(N, N);
    for (int d = 1; d <= N; ++d) s.at(d - 1, d - 1) = GaussRational(1);
    s.at(n - 1, n - 1) = GaussRational(0);
    s.at(g.m, g.m) = GaussRational(0);
    s.at(n - 1, g.m) = GaussRational(1);  // (n, m+1) entry
    s.at(g.m, n - 1) = GaussRational(1);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

using TrigMat = std::vector<std::vector<TrigPoly>>;

TrigMat mulQT(const QMatrix& q, const TrigMat& t) {
  const int N = q.rows();
  int n = t[0][0].nvars();
  TrigMat r(N, std::vector<TrigPoly>(N, TrigPoly::zero(n)));
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      if (q.at(i, k).isZero()) continue;
      for (int j = 0; j < N; ++j)
        r[i][j] += TrigPoly::constant(n, q.at(i, k)) * t[k][j];
    }
  return r;
}

TrigMat mulTQ(const TrigMat& t, const QMatrix& q) {
  const int N = q.rows();
  int n = t[0][0].nvars();
  TrigMat r(N, std::vector<TrigPoly>(N, TrigPoly::zero(n)));
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k)
      for (int j = 0; j < N; ++j) {
        if (q.at(k, j).isZero()) continue;
        r[i][j] += t[i][k] * TrigPoly::constant(n, q.at(k, j));
      }
  return r;
}

// diagonal torus in the conjugated picture: diag(e^{i t_1}..e^{i t_n},
// 1,..,1, e^{-i t_n}..e^{-i t_1})
TrigMat diagTorus(const RankPair& g) {
  const int n = g.n, N = g.N();
  TrigMat a(N, std::vector<TrigPoly>(N, TrigPoly::zero(n)));
  for (int j = 1; j <= n; ++j) {
    std::vector<int> e(n, 0);
    e[j - 1] = 1;
    a[j - 1][j - 1] = TrigPoly::monomial(n, e, GaussRational(1));
    e[j - 1] = -1;
    a[N - j][N - j] = TrigPoly::monomial(n, e, GaussRational(1));
  }
  for (int j = n + 1; j <= g.m; ++j) a[j - 1][j - 1] = TrigPoly::one(n);
  return a;
}

TrigMat applyVarMap(const TrigMat& t, const std::vector<int>& w) {
  TrigMat r = t;
  for (auto& row : r)
    for (auto& p : row) p = p.permuteVars(w);
  return r;
}

TrigMat negateVarMat(const TrigMat& t, int j) {
  TrigMat r = t;
  for (auto& row : r)
    for (auto& p : row) p = p.negateVar(j);
  return r;
}

}  // namespace

bool braidCheck(const RankPair& g) {
  const int n = g.n;
  auto s = weylGenerators(g);
  QMatrix I = QMatrix::identity(g.N());
  for (int i = 0; i < n; ++i)
    if (!(s[i] * s[i] == I)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(s[i] * s[j] == s[j] * s[i])) return false;
  for (int i = 0; i + 2 < n; ++i) {
    if (!(s[i + 1] * s[i] * s[i + 1] == s[i] * s[i + 1] * s[i])) return false;
  }
  if (n >= 2) {
    QMatrix a = s[n - 2] * s[n - 1] * s[n - 2] * s[n - 1];
    QMatrix b = s[n - 1] * s[n - 2] * s[n - 1] * s[n - 2];
    if (!(a == b)) return false;
  }

  // conjugation on the antidiagonal torus: s_i swaps t_i, t_{i+1}
  TrigMat at = torusMatrix(g);
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> w(n);
    for (int v = 1; v <= n; ++v) w[v - 1] = v;
    std::swap(w[i - 1], w[i]);
    if (!(mulQT(s[i - 1], mulTQ(at, s[i - 1])) == applyVarMap(at, w))) return false;
  }
  // on the diagonal torus all generators act, s_n by t_n -> -t_n
  TrigMat dt = diagTorus(g);
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> w(n);
    for (int v = 1; v <= n; ++v) w[v - 1] = v;
    std::swap(w[i - 1], w[i]);
    if (!(mulQT(s[i - 1], mulTQ(dt, s[i - 1])) == applyVarMap(dt, w))) return false;
  }
  if (!(mulQT(s[n - 1], mulTQ(dt, s[n - 1])) == negateVarMat(dt, n))) return false;
  return true;
}

}  // namespace mvsf
