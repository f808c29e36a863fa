#include "mvsf/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mvsf {

WedgeMask maskFromList(const std::vector<int>& idx) {
  WedgeMask m = 0;
  for (int i : idx) m |= (WedgeMask(1) << (i - 1));
  return m;
}

std::vector<int> listFromMask(WedgeMask m) {
  std::vector<int> out;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::pair<WedgeMask, int> wedgeOfList(const std::vector<int>& idx) {
  WedgeMask m = 0;
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    WedgeMask bit = WedgeMask(1) << (idx[a] - 1);
    if (m & bit) return {0, 0};
    // sorting moves the new index left past every larger index already placed
    WedgeMask above = m >> idx[a];
    if (maskSize(above) % 2 != 0) sign = -sign;
    m |= bit;
  }
  return {m, sign};
}

std::pair<WedgeMask, int> wedgeDerivation(WedgeMask S, int p, int q) {
  WedgeMask qb = WedgeMask(1) << (q - 1);
  if (!(S & qb)) return {0, 0};
  if (p == q) return {S, 1};
  WedgeMask pb = WedgeMask(1) << (p - 1);
  if (S & pb) return {0, 0};
  WedgeMask S2 = (S & ~qb) | pb;
  // sign from moving q out of its slot and p into its slot
  int lo = std::min(p, q), hi = std::max(p, q);
  WedgeMask between = S & (((WedgeMask(1) << (hi - 1)) - 1) & ~((WedgeMask(1) << lo) - 1));
  int sign = (maskSize(between) % 2 == 0) ? 1 : -1;
  return {S2, sign};
}

void TensorVector::addTerm(const Key& k, const GaussRational& c) {
  if (c.isZero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (degrees_ != o.degrees_) throw std::invalid_argument("TensorVector: factor mismatch");
  for (auto& [k, c] : o.terms_) addTerm(k, c);
  return *this;
}

TensorVector& TensorVector::operator*=(const GaussRational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorVector tensor(const TensorVector& a, const TensorVector& b) {
  std::vector<int> deg = a.degrees_;
  deg.insert(deg.end(), b.degrees_.begin(), b.degrees_.end());
  TensorVector out(a.g_, deg);
  for (auto& [ka, ca] : a.terms_) {
    for (auto& [kb, cb] : b.terms_) {
      TensorVector::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.addTerm(k, ca * cb);
    }
  }
  return out;
}

TensorVector TensorVector::applyE(int p, int q) const {
  TensorVector out(g_, degrees_);
  for (auto& [k, c] : terms_) {
    for (std::size_t f = 0; f < k.size(); ++f) {
      auto [m2, sign] = wedgeDerivation(k[f], p, q);
      if (sign == 0) continue;
      Key k2 = k;
      k2[f] = m2;
      out.addTerm(k2, c * GaussRational(sign));
    }
  }
  return out;
}

GaussRational gram(const TensorVector& v, const TensorVector& w) {
  if (v.factorDegrees() != w.factorDegrees())
    throw std::invalid_argument("gram: factor mismatch");
  GaussRational s;
  for (auto& [k, c] : v.terms()) {
    auto it = w.terms().find(k);
    if (it != w.terms().end()) s += c * it->second.conj();
  }
  return s;
}

namespace {

// class key for the antidiagonal pairing {j, N+1-j}, j <= n; middle indices
// n+1..m are their own class
inline int classOf(const RankPair& g, int p) {
  const int N = g.N();
  if (p <= g.n) return p;
  if (p >= g.m + 1) return N + 1 - p;
  return p;
}

// parity of sorting the (ascending-by-index) set into ascending (class, index)
int classSortSign(const RankPair& g, WedgeMask S) {
  auto idx = listFromMask(S);
  std::vector<std::pair<int, int>> keys;
  for (int p : idx) keys.emplace_back(classOf(g, p), p);
  int inv = 0;
  for (std::size_t a = 0; a < keys.size(); ++a)
    for (std::size_t b = a + 1; b < keys.size(); ++b)
      if (keys[a] > keys[b]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

TrigPoly torusMinor(const RankPair& g, WedgeMask S, WedgeMask T) {
  const int n = g.n, N = g.N();
  if (maskSize(S) != maskSize(T)) return TrigPoly::zero(n);
  TrigPoly out = TrigPoly::one(n);
  for (int j = 1; j <= n; ++j) {
    WedgeMask lo = WedgeMask(1) << (j - 1), hi = WedgeMask(1) << (N - j);
    int sIn = ((S & lo) ? 1 : 0) + ((S & hi) ? 1 : 0);
    int tIn = ((T & lo) ? 1 : 0) + ((T & hi) ? 1 : 0);
    if (sIn != tIn) return TrigPoly::zero(n);
    if (sIn == 1) {
      bool sLow = (S & lo) != 0, tLow = (T & lo) != 0;
      if (sLow == tLow) {
        out = out * TrigPoly::cosT(n, j);
      } else {
        out = out * (GaussRational::i() * TrigPoly::sinT(n, j));
      }
    }
    // sIn == 0 or 2: the 2x2 block contributes det = 1
  }
  for (int p = g.n + 1; p <= g.m; ++p) {
    WedgeMask bit = WedgeMask(1) << (p - 1);
    if (((S & bit) != 0) != ((T & bit) != 0)) return TrigPoly::zero(n);
  }
  int sign = classSortSign(g, S) * classSortSign(g, T);
  if (sign < 0) out = out * GaussRational(-1);
  return out;
}

TrigPoly matElem(const TensorVector& v, const TensorVector& w) {
  if (v.factorDegrees() != w.factorDegrees())
    throw std::invalid_argument("matElem: factor mismatch");
  const RankPair& g = v.g();
  TrigPoly out = TrigPoly::zero(g.n);
  for (auto& [kv, cv] : v.terms()) {
    for (auto& [kw, cw] : w.terms()) {
      TrigPoly prod = TrigPoly::constant(g.n, cv * cw.conj());
      for (std::size_t f = 0; f < kv.size() && !prod.isZero(); ++f)
        prod = prod * torusMinor(g, kv[f], kw[f]);
      out += prod;
    }
  }
  return out;
}

std::vector<std::vector<TrigPoly>> torusMatrix(const RankPair& g) {
  const int n = g.n, N = g.N();
  std::vector<std::vector<TrigPoly>> a(N, std::vector<TrigPoly>(N, TrigPoly::zero(n)));
  for (int k = 1; k <= n; ++k) {
    TrigPoly c = TrigPoly::cosT(n, k);
    TrigPoly is = GaussRational::i() * TrigPoly::sinT(n, k);
    a[k - 1][k - 1] = c;
    a[N - k][N - k] = c;
    a[N - k][k - 1] = is;  // row N+1-k, column k
    a[k - 1][N - k] = is;
  }
  for (int k = n + 1; k <= g.m; ++k) a[k - 1][k - 1] = TrigPoly::one(n);
  return a;
}

namespace {

void subsetsOf(const std::vector<int>& pool, int k, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& emit, std::size_t from = 0) {
  if ((int)cur.size() == k) {
    emit(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsetsOf(pool, k, cur, emit, i + 1);
    cur.pop_back();
  }
}

int indexSum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> rangeList(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<int> complementIn(const std::vector<int>& universe, WedgeMask used) {
  std::vector<int> out;
  for (int i : universe)
    if (!(used & (WedgeMask(1) << (i - 1)))) out.push_back(i);
  return out;
}

}  // namespace

TensorVector vHk(const RankPair& g, int s, int u, const std::vector<int>& H, int k) {
  if ((int)H.size() != s || (s > 0 && (!std::is_sorted(H.begin(), H.end()) || H.back() > g.n)))
    throw std::invalid_argument("vHk: H must be a sorted subset of {1..n}");
  if (k < 0 || k > u) throw std::out_of_range("vHk: k must lie in 0..u");
  const int N = g.N();
  TensorVector out(g, {s + u, N - u});
  auto Npool = rangeList(1, g.n);
  auto Mpool = rangeList(g.n + 1, N);
  WedgeMask Hm = maskFromList(H);
  std::vector<int> curP, curQ;
  subsetsOf(Npool, k, curP, [&](const std::vector<int>& P) {
    WedgeMask Pm = maskFromList(P);
    if (Pm & Hm) return;  // e_H ^ e_P = 0
    std::vector<int> first = H;
    first.insert(first.end(), P.begin(), P.end());
    subsetsOf(Mpool, u - k, curQ, [&](const std::vector<int>& Q) {
      std::vector<int> f1 = first;
      f1.insert(f1.end(), Q.begin(), Q.end());
      auto [m1, s1] = wedgeOfList(f1);
      std::vector<int> f2 = complementIn(Npool, Pm);
      for (int q : complementIn(Mpool, maskFromList(Q))) f2.push_back(q);
      auto [m2, s2] = wedgeOfList(f2);
      int sgn = ((indexSum(P) + indexSum(Q)) % 2 == 0) ? 1 : -1;
      out.addTerm({m1, m2}, GaussRational(sgn * s1 * s2));
    });
  });
  return out;
}

TensorVector kFixedVector(const RankPair& g, int i) {
  return vHk(g, 0, i, {}, i);
}

TensorVector rankOneWFactor(const RankPair& g, int i) {
  const int N = g.N();
  TensorVector out(g, {i, N + 1 - i});
  auto Npool = rangeList(1, g.n);
  auto Mpool = rangeList(g.n + 1, N);
  std::vector<int> cur;
  subsetsOf(Npool, i - 1, cur, [&](const std::vector<int>& P) {
    WedgeMask Pm = maskFromList(P);
    if (Pm & 1u) return;  // 1 in P
    std::vector<int> f1 = {1};
    f1.insert(f1.end(), P.begin(), P.end());
    auto [m1, s1] = wedgeOfList(f1);
    std::vector<int> f2 = complementIn(Npool, Pm);
    f2.insert(f2.end(), Mpool.begin(), Mpool.end());
    auto [m2, s2] = wedgeOfList(f2);
    int sgn = (indexSum(P) % 2 == 0) ? 1 : -1;
    out.addTerm({m1, m2}, GaussRational(sgn * s1 * s2));
  });
  return out;
}

namespace {

TensorVector eNPower(const RankPair& g, int b) {
  TensorVector out(g, std::vector<int>(b, g.n));
  if (b == 0) {
    out = TensorVector(g, {});
    out.addTerm({}, GaussRational(1));
    return out;
  }
  WedgeMask eN = maskFromList(rangeList(1, g.n));
  out.addTerm(TensorVector::Key(b, eN), GaussRational(1));
  return out;
}

}  // namespace

TensorVector rankOneHighestVector(const RankPair& g, const std::vector<int>& composition,
                                  int b) {
  if ((int)composition.size() != g.n)
    throw std::invalid_argument("rankOneHighestVector: composition length");
  TensorVector out(g, {});
  out.addTerm({}, GaussRational(1));
  for (int i = 1; i <= g.n; ++i)
    for (int c = 0; c < composition[i - 1]; ++c) out = tensor(out, rankOneWFactor(g, i));
  return tensor(out, eNPower(g, b));
}

TensorVector wedgeEmbedding(const RankPair& g, const std::vector<std::pair<int, int>>& runs,
                            const std::vector<int>& degrees, int b, const std::vector<int>& H) {
  const int N = g.N();
  const int s = (int)H.size();
  auto Npool = rangeList(1, g.n);
  auto Mpool = rangeList(g.n + 1, N);

  // per-run wedge factor for one arrangement of H: block of h's wedge e_{P_k}
  // tensored with e_{N\P_k} ^ e_M
  auto runFactor = [&](const std::vector<int>& block, int y) {
    TensorVector out(g, {(int)block.size() + y, N - y});
    std::vector<int> cur;
    subsetsOf(Npool, y, cur, [&](const std::vector<int>& P) {
      WedgeMask Pm = maskFromList(P);
      if (Pm & maskFromList(block)) return;
      std::vector<int> f1 = block;
      f1.insert(f1.end(), P.begin(), P.end());
      auto [m1, s1] = wedgeOfList(f1);
      if (s1 == 0) return;
      std::vector<int> f2 = complementIn(Npool, Pm);
      f2.insert(f2.end(), Mpool.begin(), Mpool.end());
      auto [m2, s2] = wedgeOfList(f2);
      int sgn = (indexSum(P) % 2 == 0) ? 1 : -1;
      out.addTerm({m1, m2}, GaussRational(sgn * s1 * s2));
    });
    return out;
  };

  // sum over permutations of H distributed into the run blocks
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  TensorVector total;
  bool firstTerm = true;
  do {
    int l = 0;  // inversion count = parity of perm
    for (int a = 0; a < s; ++a)
      for (int c = a + 1; c < s; ++c)
        if (perm[a] > perm[c]) ++l;
    TensorVector term(g, {});
    term.addTerm({}, GaussRational((l % 2 == 0) ? 1 : -1));
    int pos = 0;
    for (auto [x, y] : runs) {
      int blockLen = x - y;
      std::vector<int> block;
      for (int a = 0; a < blockLen; ++a) block.push_back(H[perm[pos + a]]);
      pos += blockLen;
      term = tensor(term, runFactor(block, y));
    }
    if (firstTerm) {
      total = term;
      firstTerm = false;
    } else {
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  total = tensor(total, eNPower(g, b));
  for (int i = 1; i <= g.n; ++i)
    for (int c = 0; c < (i - 1 < (int)degrees.size() ? degrees[i - 1] : 0); ++c)
      total = tensor(total, kFixedVector(g, i));
  return total;
}

MTypeBasis MTypeBasis::build(const MuSpec& mu) {
  MTypeBasis b{mu, {}};
  if (mu.isRankOne()) {
    // lexicographically decreasing compositions, (a,0,..,0) first
    std::function<void(int, int, std::vector<int>&)> rec = [&](int total, int slots,
                                                               std::vector<int>& cur) {
      if (slots == 1) {
        cur.push_back(total);
        b.labels.push_back(cur);
        cur.pop_back();
        return;
      }
      for (int k = total; k >= 0; --k) {
        cur.push_back(k);
        rec(total - k, slots - 1, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    rec(mu.p1, mu.g.n, cur);
  } else {
    std::function<void(int, std::vector<int>&)> rec = [&](int next, std::vector<int>& cur) {
      if ((int)cur.size() == mu.p1) {
        b.labels.push_back(cur);
        return;
      }
      for (int j = next; j <= mu.g.n; ++j) {
        cur.push_back(j);
        rec(j + 1, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    rec(1, cur);
  }
  return b;
}

int MTypeBasis::indexOf(const std::vector<int>& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return (int)i;
  throw std::out_of_range("MTypeBasis::indexOf: unknown label");
}

std::map<std::vector<int>, TensorVector> lowerOrbit(const TensorVector& highest,
                                                    const MuSpec& mu) {
  MTypeBasis basis = MTypeBasis::build(mu);
  std::map<std::vector<int>, TensorVector> images;

  if (mu.isRankOne()) {
    const int n = mu.g.n;
    std::vector<int> top(n, 0);
    top[0] = mu.p1;
    images[top] = highest;
    // E_{j,j-1} x^{c'} = c'_{j-1} x^c pulls weight one slot to the right
    std::function<const TensorVector&(const std::vector<int>&)> get =
        [&](const std::vector<int>& c) -> const TensorVector& {
      auto it = images.find(c);
      if (it != images.end()) return it->second;
      int j = -1;
      for (int k = n; k >= 2; --k)
        if (c[k - 1] > 0) {
          j = k;
          break;
        }
      if (j < 0) throw std::logic_error("lowerOrbit: bad composition");
      std::vector<int> cp = c;
      cp[j - 1] -= 1;
      cp[j - 2] += 1;
      TensorVector img = get(cp).applyE(j, j - 1);
      img *= GaussRational(rat(1, cp[j - 2]));
      return images.emplace(c, std::move(img)).first->second;
    };
    for (auto& label : basis.labels) {
      const TensorVector& v = get(label);
      if (v.isZero()) throw std::logic_error("lowerOrbit: orbit does not close");
    }
  } else {
    std::vector<int> top;
    for (int j = 1; j <= mu.p1; ++j) top.push_back(j);
    images[top] = highest;
    // move the largest movable element up by one: e_H -> e_{H - j + (j+1)}
    std::function<const TensorVector&(const std::vector<int>&)> get =
        [&](const std::vector<int>& H) -> const TensorVector& {
      auto it = images.find(H);
      if (it != images.end()) return it->second;
      // find j+1 in H with j notin H; predecessor H' has j in place of j+1
      for (int pos = (int)H.size() - 1; pos >= 0; --pos) {
        int v = H[pos];
        if (v - 1 >= 1 && (pos == 0 || H[pos - 1] < v - 1) && v - 1 >= pos + 1) {
          std::vector<int> Hp = H;
          Hp[pos] = v - 1;
          if (std::is_sorted(Hp.begin(), Hp.end())) {
            TensorVector img = get(Hp).applyE(v, v - 1);
            return images.emplace(H, std::move(img)).first->second;
          }
        }
      }
      throw std::logic_error("lowerOrbit: no lowering path");
    };
    for (auto& label : basis.labels) {
      const TensorVector& v = get(label);
      if (v.isZero()) throw std::logic_error("lowerOrbit: orbit does not close");
    }
  }
  return images;
}

TrigPoly qLadderEntry(const MuSpec& mu, int i, const std::vector<int>& H) {
  if (mu.isRankOne()) throw std::invalid_argument("qLadderEntry: Wedge family only");
  const int n = mu.g.n;
  if (i < 0 || i > n - mu.p1) throw std::out_of_range("qLadderEntry: rung index");
  TrigPoly p = cosProduct(n, H);
  p = p * cosProduct(n, rangeList(1, n)).pow(mu.b);
  return p * psiElem(n, i, H);
}

TrigPoly qLambdaHEntry(const MuSpec& mu, const std::vector<std::pair<int, int>>& runs,
                       const std::vector<int>& degrees, const std::vector<int>& H) {
  if (mu.isRankOne()) throw std::invalid_argument("qLambdaHEntry: Wedge family only");
  const int n = mu.g.n;
  const int s = (int)H.size();
  TrigPoly head = cosProduct(n, H) * cosProduct(n, rangeList(1, n)).pow(mu.b);
  for (int i = 1; i <= n; ++i)
    if (i - 1 < (int)degrees.size() && degrees[i - 1] > 0)
      head = head * psiElem(n, i).pow(degrees[i - 1]);

  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  TrigPoly sum = TrigPoly::zero(n);
  do {
    TrigPoly prod = TrigPoly::one(n);
    int pos = 0;
    for (auto [x, y] : runs) {
      std::vector<int> block;
      for (int a = 0; a < x - y; ++a) block.push_back(H[perm[pos + a]]);
      pos += x - y;
      prod = prod * psiElem(n, y, block);
    }
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return head * sum;
}

}  // namespace mvsf
