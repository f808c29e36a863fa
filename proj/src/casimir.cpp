#include "mvsf/casimir.hpp"

#include <algorithm>
#include <tuple>

namespace mvsf {

// --- QMatrix -------------------------------------------------------------

QMatrix QMatrix::identity(int n) {
  QMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = GaussRational(1);
  return I;
}

bool QMatrix::isZero() const {
  for (auto& x : a_)
    if (!x.isZero()) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const GaussRational& x = at(i, k);
      if (x.isZero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).isZero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r = *this;
  for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] += o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix r = *this;
  for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] -= o.a_[i];
  return r;
}

QMatrix QMatrix::scaled(const GaussRational& c) const {
  QMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

QMatrix QMatrix::adjoint() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

std::vector<int> rowReduce(std::vector<std::vector<GaussRational>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = (int)m.size(), cols = (int)m[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int k = r; k < rows; ++k)
      if (!m[k][c].isZero()) {
        pr = k;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    GaussRational inv = GaussRational(1) / m[r][c];
    for (int t = c; t < cols; ++t) m[r][t] *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r || m[k][c].isZero()) continue;
      GaussRational f = m[k][c];
      for (int t = c; t < cols; ++t) m[k][t] -= f * m[r][t];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<GaussRational> solveExact(const QMatrix& A, const std::vector<GaussRational>& b) {
  const int rows = A.rows(), cols = A.cols();
  std::vector<std::vector<GaussRational>> m(rows, std::vector<GaussRational>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = A.at(i, j);
    m[i][cols] = b[i];
  }
  auto pivots = rowReduce(m);
  // consistency
  for (int i = 0; i < rows; ++i) {
    bool allZero = true;
    for (int j = 0; j < cols; ++j) allZero = allZero && m[i][j].isZero();
    if (allZero && !m[i][cols].isZero()) throw std::runtime_error("solveExact: inconsistent");
  }
  if ((int)pivots.size() != cols) throw std::runtime_error("solveExact: underdetermined");
  std::vector<GaussRational> x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m[k][cols];
  return x;
}

std::vector<std::vector<GaussRational>> nullspace(const QMatrix& A) {
  const int rows = A.rows(), cols = A.cols();
  std::vector<std::vector<GaussRational>> m(std::max(rows, 1),
                                            std::vector<GaussRational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = A.at(i, j);
  auto pivots = rowReduce(m);
  std::vector<bool> isPivot(cols, false);
  for (int p : pivots) isPivot[p] = true;
  std::vector<std::vector<GaussRational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (isPivot[f]) continue;
    std::vector<GaussRational> v(cols);
    v[f] = GaussRational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- DiagFunc ------------------------------------------------------------

DiagFunc& DiagFunc::operator+=(const DiagFunc& o) {
  if (entries.size() != o.entries.size()) throw std::invalid_argument("DiagFunc: dim mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
  return *this;
}

DiagFunc& DiagFunc::operator-=(const DiagFunc& o) {
  if (entries.size() != o.entries.size()) throw std::invalid_argument("DiagFunc: dim mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= o.entries[i];
  return *this;
}

DiagFunc DiagFunc::scaled(const GaussRational& c) const {
  DiagFunc r = *this;
  for (auto& e : r.entries) e *= c;
  return r;
}

DiagFunc DiagFunc::entrywise(const TrigPoly& p) const {
  DiagFunc r = *this;
  for (auto& e : r.entries) e = e * p;
  return r;
}

bool DiagFunc::isZero() const {
  for (auto& e : entries)
    if (!e.isZero()) return false;
  return true;
}

// --- Ad(u*) X_alpha over Q[sqrt(2)] ---------------------------------------

namespace {

// a + b sqrt(2)
struct Quad {
  Rational a, b;
  Quad() : a(0), b(0) {}
  Quad(Rational x) : a(std::move(x)), b(0) {}
  Quad(Rational x, Rational y) : a(std::move(x)), b(std::move(y)) {}
  bool isZero() const { return a == 0 && b == 0; }
  Quad operator+(const Quad& o) const { return {a + o.a, b + o.b}; }
  Quad operator-(const Quad& o) const { return {a - o.a, b - o.b}; }
  Quad operator*(const Quad& o) const {
    return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
  }
};

using QuadMat = std::vector<std::vector<Quad>>;

QuadMat quadZero(int N) { return QuadMat(N, std::vector<Quad>(N)); }

QuadMat quadMul(const QuadMat& x, const QuadMat& y) {
  const int N = (int)x.size();
  QuadMat r = quadZero(N);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      if (x[i][k].isZero()) continue;
      for (int j = 0; j < N; ++j) {
        if (y[k][j].isZero()) continue;
        r[i][j] = r[i][j] + x[i][k] * y[k][j];
      }
    }
  return r;
}

// u maps the antidiagonal K' picture to the block-diagonal one.
QuadMat uMatrix(const RankPair& g, bool adjoint) {
  const int n = g.n, N = g.N();
  QuadMat u = quadZero(N);
  Quad h(Rational(0), Rational(1, 2));  // 1/sqrt(2)
  for (int i = 1; i <= n; ++i) {
    u[i - 1][i - 1] = h;
    u[N - i][N - i] = h;
    // upper-right block (1/sqrt2) L: entry (i, N+1-i); lower-left -(1/sqrt2) L
    u[i - 1][N - i] = h;
    u[N - i][i - 1] = Quad(Rational(0), Rational(-1, 2));
  }
  for (int i = n + 1; i <= g.m; ++i) u[i - 1][i - 1] = Quad(Rational(1));
  if (adjoint) {
    QuadMat ut = quadZero(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) ut[i][j] = u[j][i];  // real entries
    return ut;
  }
  return u;
}

QuadMat eMatrix(int N, int p, int q) {
  QuadMat e = quadZero(N);
  e[p - 1][q - 1] = Quad(Rational(1));
  return e;
}

// X_alpha = Y_alpha + Y_{theta' alpha} where theta' swaps index p with
// N+1-p for p <= n and fixes the middle block.
int mirrored(const RankPair& g, int p) {
  if (p <= g.n || p >= g.m + 1) return g.N() + 1 - p;
  return p;
}

QuadMat xAlphaQuad(const RankPair& g, int p, int q) {
  const int N = g.N();
  QuadMat x = eMatrix(N, p, q);
  QuadMat y = eMatrix(N, mirrored(g, p), mirrored(g, q));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) x[i][j] = x[i][j] + y[i][j];
  return x;
}

bool quadBlockDiagonal(const RankPair& g, const QuadMat& m) {
  const int n = g.n, N = g.N();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      bool upperI = i < n, upperJ = j < n;
      if (upperI != upperJ && !m[i][j].isZero()) return false;
    }
  return true;
}

// Convert the conjugated pair to rational matrices: a purely rational
// matrix passes through, a purely sqrt(2)-proportional one is rescaled
// (times sqrt2 on the plus side, divided on the minus side).
QMatrix quadToRational(const QuadMat& m, bool scaleUp) {
  const int N = (int)m.size();
  bool hasRat = false, hasIrr = false;
  for (auto& row : m)
    for (auto& x : row) {
      if (x.a != 0) hasRat = true;
      if (x.b != 0) hasIrr = true;
    }
  if (hasRat && hasIrr)
    throw NonBlockDiagonalError("Ad(u*) X_alpha mixes rational and sqrt(2) parts");
  QMatrix out(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (!hasIrr) {
        out.at(i, j) = GaussRational(m[i][j].a);
      } else {
        // sqrt(2) * (b sqrt(2)) = 2 b ; (b sqrt(2)) / sqrt(2) = b
        out.at(i, j) = GaussRational(scaleUp ? 2 * m[i][j].b : m[i][j].b);
      }
    }
  return out;
}

}  // namespace

std::vector<XAlphaPair> buildXAlpha(const RankPair& g) {
  const int n = g.n, N = g.N();
  QuadMat u = uMatrix(g, false), uStar = uMatrix(g, true);
  auto conj = [&](int p, int q) { return quadMul(uStar, quadMul(xAlphaQuad(g, p, q), u)); };
  auto makePair = [&](RestrictedRootTerm::Kind kind, int j, int k, int p, int q) {
    QuadMat plus = conj(p, q);
    QuadMat minus = conj(q, p);
    if (!quadBlockDiagonal(g, plus) || !quadBlockDiagonal(g, minus))
      throw NonBlockDiagonalError("Ad(u*) X_alpha has off-diagonal blocks");
    return XAlphaPair{kind, j, k, quadToRational(plus, true), quadToRational(minus, false)};
  };

  std::vector<XAlphaPair> out;
  using K = RestrictedRootTerm::Kind;
  for (int j = 1; j <= n; ++j) {
    for (int r = 1; r <= g.m - g.n; ++r) {
      out.push_back(makePair(K::Short, j, 0, j, n + r));            // eps_j - eps_{n+r}
      out.push_back(makePair(K::Short, j, 0, n + r, N + 1 - j));    // eps_{n+r} - eps_{N+1-j}
    }
    out.push_back(makePair(K::Long, j, 0, j, N + 1 - j));           // eps_j - eps_{N+1-j}
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      out.push_back(makePair(K::MiddleMinus, j, k, j, k));                  // eps_j - eps_k
      out.push_back(makePair(K::MiddleMinus, j, k, N + 1 - k, N + 1 - j));  // mirrored
      out.push_back(makePair(K::MiddlePlus, j, k, j, N + 1 - k));           // eps_j - eps_{N+1-k}
      out.push_back(makePair(K::MiddlePlus, j, k, k, N + 1 - j));           // eps_k - eps_{N+1-j}
    }
  }
  return out;
}

QMatrix piMu(const MuSpec& mu, const QMatrix& blockDiagElement) {
  const int n = mu.g.n;
  MTypeBasis basis = MTypeBasis::build(mu);
  const int dim = basis.dim();
  // trace of the upper block for the determinant twist
  GaussRational trA;
  for (int i = 0; i < n; ++i) trA += blockDiagElement.at(i, i);

  QMatrix out(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const auto& label = basis.labels[col];
    if (mu.isRankOne()) {
      // x_p d/d x_q on monomials
      for (int q = 1; q <= n; ++q) {
        if (label[q - 1] == 0) continue;
        for (int p = 1; p <= n; ++p) {
          const GaussRational& a = blockDiagElement.at(p - 1, q - 1);
          if (a.isZero()) continue;
          std::vector<int> im = label;
          im[q - 1] -= 1;
          im[p - 1] += 1;
          out.at(basis.indexOf(im), col) += a * GaussRational(Rational(label[q - 1]));
        }
      }
    } else {
      WedgeMask H = maskFromList(label);
      for (int q = 1; q <= n; ++q) {
        if (!(H & (WedgeMask(1) << (q - 1)))) continue;
        for (int p = 1; p <= n; ++p) {
          const GaussRational& a = blockDiagElement.at(p - 1, q - 1);
          if (a.isZero()) continue;
          auto [m2, sg] = wedgeDerivation(H, p, q);
          if (sg == 0) continue;
          out.at(basis.indexOf(listFromMask(m2)), col) += a * GaussRational(sg);
        }
      }
    }
    if (mu.b > 0) out.at(col, col) += trA * GaussRational(Rational(mu.b));
  }
  return out;
}

Rational omegaMScalarWedge(const MuSpec& mu) {
  if (mu.isRankOne()) throw std::invalid_argument("omegaMScalarWedge: Wedge family only");
  Rational s(mu.p1), b(mu.b), n(mu.g.n), m(mu.g.m);
  Rational num = 2 * s * s + ((2 * b - 1) * n + (-2 * b - 1) * m) * s + b * b * n * n -
                 b * b * m * n;
  return -num / (2 * n + 2 * m);
}

// --- RadialOperator --------------------------------------------------------

namespace {

DiagFunc bottomApproximantRankOne(const MuSpec& mu);

}  // namespace

RadialOperator::RadialOperator(const MuSpec& mu) : mu_(mu), basis_(MTypeBasis::build(mu)) {
  // group the conjugated root pairs by restricted root
  std::map<std::tuple<int, int, int>, std::size_t> slot;
  for (auto& xp : buildXAlpha(mu.g)) {
    auto key = std::make_tuple((int)xp.kind, xp.j, xp.k);
    auto it = slot.find(key);
    if (it == slot.end()) {
      RestrictedRootTerm t;
      t.kind = xp.kind;
      t.j = xp.j;
      t.k = xp.k;
      slot.emplace(key, roots_.size());
      roots_.push_back(std::move(t));
      it = slot.find(key);
    }
    roots_[it->second].pairs.emplace_back(piMu(mu, xp.plus), piMu(mu, xp.minus));
  }

  const int dim = basis_.dim();
  if (!mu.isRankOne()) {
    mScalars_.assign(dim, omegaMScalarWedge(mu));
  } else {
    // fix the m-part scalars by making the bottom approximant an exact
    // eigenfunction with eigenvalue c_mu
    mScalars_.assign(dim, Rational(0));
    DiagFunc q0 = bottomApproximantRankOne(mu);
    DiagFunc r0 = apply(q0);
    Rational cmu = casimirEigenvalue(mu.muWeight());
    const std::vector<int> zeroExp(mu.g.n, 0);
    for (int i = 0; i < dim; ++i) {
      TrigPoly target = TrigPoly::constant(mu.g.n, GaussRational(cmu)) * q0.entries[i];
      TrigPoly ratio = TrigPoly::exactDiv(target - r0.entries[i], q0.entries[i]);
      if (ratio.isZero()) {
        mScalars_[i] = Rational(0);
        continue;
      }
      GaussRational c0 = ratio.coeff(zeroExp);
      if (ratio.termCount() != 1 || c0.isZero() || !c0.isReal())
        throw std::logic_error("RadialOperator: m-part scalar is not constant");
      mScalars_[i] = c0.re;
    }
  }
}

DiagFunc RadialOperator::applyRootParts(const DiagFunc& F) const {
  const int n = mu_.g.n;
  const int dim = basis_.dim();
  DiagFunc out = DiagFunc::zeros(dim, n);

  for (auto& root : roots_) {
    TrigPoly theta, dF_coeff;
    std::vector<TrigPoly> dF(dim, TrigPoly::zero(n));
    switch (root.kind) {
      case RestrictedRootTerm::Kind::Short:
        theta = TrigPoly::sinT(n, root.j);
        for (int i = 0; i < dim; ++i) dF[i] = F.entries[i].ddt(root.j);
        break;
      case RestrictedRootTerm::Kind::Long: {
        std::vector<int> a(n, 0);
        a[root.j - 1] = 2;
        theta = TrigPoly::sinLin(n, a);
        for (int i = 0; i < dim; ++i)
          dF[i] = F.entries[i].ddt(root.j) * GaussRational(2);
        break;
      }
      case RestrictedRootTerm::Kind::MiddleMinus: {
        std::vector<int> a(n, 0);
        a[root.j - 1] = 1;
        a[root.k - 1] = -1;
        theta = TrigPoly::sinLin(n, a);
        for (int i = 0; i < dim; ++i)
          dF[i] = F.entries[i].ddt(root.j) - F.entries[i].ddt(root.k);
        break;
      }
      case RestrictedRootTerm::Kind::MiddlePlus: {
        std::vector<int> a(n, 0);
        a[root.j - 1] = 1;
        a[root.k - 1] = 1;
        theta = TrigPoly::sinLin(n, a);
        for (int i = 0; i < dim; ++i)
          dF[i] = F.entries[i].ddt(root.j) + F.entries[i].ddt(root.k);
        break;
      }
    }
    TrigPoly cosTheta;
    {
      // cos of the same linear form
      std::vector<int> a(n, 0);
      if (root.kind == RestrictedRootTerm::Kind::Short) {
        a[root.j - 1] = 1;
      } else if (root.kind == RestrictedRootTerm::Kind::Long) {
        a[root.j - 1] = 2;
      } else {
        a[root.j - 1] = 1;
        a[root.k - 1] = (root.kind == RestrictedRootTerm::Kind::MiddleMinus) ? -1 : 1;
      }
      cosTheta = TrigPoly::cosLin(n, a);
    }

    // numerator matrix of this restricted root, divided once by 2 sin^2
    std::vector<std::vector<TrigPoly>> num(
        dim, std::vector<TrigPoly>(dim, TrigPoly::zero(n)));
    for (auto& [P, M] : root.pairs) {
      QMatrix PM = P * M;
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          // P M F  +  F P M   (F diagonal)
          if (!PM.at(r, c).isZero()) {
            num[r][c] += TrigPoly::constant(n, PM.at(r, c)) * (F.entries[c] + F.entries[r]);
          }
          // - 2 cos(theta) P F M
          for (int l = 0; l < dim; ++l) {
            if (P.at(r, l).isZero() || M.at(l, c).isZero()) continue;
            TrigPoly t = TrigPoly::constant(n, P.at(r, l) * M.at(l, c)) * F.entries[l];
            num[r][c] -= GaussRational(2) * cosTheta * t;
          }
        }
      }
      // - cos(theta) sin(theta) dF on the diagonal, once per pair
      for (int r = 0; r < dim; ++r) num[r][r] -= cosTheta * theta * dF[r];
    }

    TrigPoly den = GaussRational(2) * theta * theta;
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        if (num[r][c].isZero()) continue;
        TrigPoly q = TrigPoly::exactDiv(num[r][c], den);
        if (r == c) {
          out.entries[r] += q;
        } else if (!q.isZero()) {
          throw std::logic_error("RadialOperator: off-diagonal image");
        }
      }
    }
  }
  return out;
}

DiagFunc RadialOperator::apply(const DiagFunc& F) const {
  if (F.dim() != basis_.dim()) throw std::invalid_argument("RadialOperator: dim mismatch");
  const int n = mu_.g.n;
  DiagFunc out = applyRootParts(F);
  for (int i = 0; i < F.dim(); ++i) {
    TrigPoly second = TrigPoly::zero(n);
    for (int j = 1; j <= n; ++j) second += F.entries[i].ddt(j).ddt(j);
    out.entries[i] -= second * GaussRational(Rational(1, 2));
    out.entries[i] += TrigPoly::constant(n, GaussRational(mScalars_[i])) * F.entries[i];
  }
  return out;
}

DiagFunc applyRadial(const MuSpec& mu, const DiagFunc& F) {
  return RadialOperator(mu).apply(F);
}

std::vector<GaussRational> expandInBasis(const DiagFunc& G, const std::vector<DiagFunc>& basis) {
  if (basis.empty()) {
    if (G.isZero()) return {};
    throw NotInSpanError("expandInBasis: empty basis");
  }
  // equations indexed by (entry, exponent)
  std::map<std::pair<int, std::vector<int>>, std::size_t> eqIndex;
  auto touch = [&](const DiagFunc& f) {
    for (int i = 0; i < f.dim(); ++i)
      for (auto& [e, c] : f.entries[i].terms()) {
        auto key = std::make_pair(i, e);
        if (!eqIndex.count(key)) eqIndex.emplace(key, eqIndex.size());
      }
  };
  touch(G);
  for (auto& f : basis) touch(f);

  QMatrix A((int)eqIndex.size(), (int)basis.size());
  std::vector<GaussRational> b(eqIndex.size());
  for (auto& [key, row] : eqIndex) {
    b[row] = G.entries[key.first].coeff(key.second);
    for (std::size_t k = 0; k < basis.size(); ++k)
      A.at((int)row, (int)k) = basis[k].entries[key.first].coeff(key.second);
  }
  try {
    return solveExact(A, b);
  } catch (const std::runtime_error&) {
    throw NotInSpanError("expandInBasis: target is not in the exact span");
  }
}

// --- rank-one bottom approximant (for the scalar bootstrap) ----------------

namespace {

DiagFunc bottomApproximantRankOne(const MuSpec& mu) {
  const int n = mu.g.n;
  std::vector<int> comp0(n, 0);
  comp0[0] = mu.p1;
  MTypeBasis basis = MTypeBasis::build(mu);
  auto images = lowerOrbit(rankOneHighestVector(mu.g, comp0, mu.b), mu);
  DiagFunc q = DiagFunc::zeros(basis.dim(), n);
  for (int i = 0; i < basis.dim(); ++i) {
    const TensorVector& v = images.at(basis.labels[i]);
    TrigPoly raw = matElem(v, v);
    GaussRational norm = gram(v, v);
    q.entries[i] = raw * (GaussRational(1) / norm);
  }
  return q;
}

}  // namespace

}  // namespace mvsf
