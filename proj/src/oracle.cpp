#include "mvsf/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace mvsf {

Integer CharacterTable::total() const {
  Integer t(0);
  for (auto& [w, m] : mult) t += m;
  return t;
}

Integer CharacterTable::at(const std::vector<long>& w) const {
  auto it = mult.find(w);
  return it == mult.end() ? Integer(0) : it->second;
}

namespace {

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

namespace {

// weights of a polynomial gl_k representation have small nonnegative
// entries; pack them seven bits per coordinate for fast table keys
constexpr int kPackBits = 7;

std::uint64_t packWeight(const std::vector<long>& w) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] >= (1 << kPackBits))
      throw std::invalid_argument("freudenthal: weight entry out of packing range");
    key |= std::uint64_t(w[i]) << (kPackBits * i);
  }
  return key;
}

std::vector<long> unpackWeight(std::uint64_t key, int rank) {
  std::vector<long> w(rank);
  for (int i = 0; i < rank; ++i) w[i] = (key >> (kPackBits * i)) & ((1 << kPackBits) - 1);
  return w;
}

}  // namespace

namespace {

// partitions of total into at most maxParts parts, each part <= maxPart
void partitionsInto(long total, int maxParts, long maxPart, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  if (maxParts == 0) return;
  for (long p = std::min(total, maxPart); p >= 1; --p) {
    cur.push_back(p);
    partitionsInto(total - p, maxParts - 1, p, cur, out);
    cur.pop_back();
  }
}

bool dominatedBy(const std::vector<long>& mu, const std::vector<long>& lam) {
  long run = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    run += lam[i] - mu[i];
    if (run < 0) return false;
  }
  return run == 0;
}

}  // namespace

CharacterTable freudenthal(int rank, const std::vector<long>& highest, long dimensionCap) {
  if ((int)highest.size() != rank) throw std::invalid_argument("freudenthal: rank mismatch");
  if (rank > 9) throw std::invalid_argument("freudenthal: rank exceeds the packed-key range");
  for (int i = 0; i + 1 < rank; ++i)
    if (highest[i] < highest[i + 1])
      throw std::invalid_argument("freudenthal: highest weight not dominant");
  if (highest[rank - 1] < 0)
    throw std::invalid_argument("freudenthal: negative highest weight entry");

  std::vector<long> rho(rank);
  for (int i = 0; i < rank; ++i) rho[i] = rank - 1 - i;
  std::vector<long> lr(highest);
  for (int i = 0; i < rank; ++i) lr[i] += rho[i];
  const long lrNorm = dot(lr, lr);
  long total = 0;
  for (long x : highest) total += x;

  // the dominant weights are exactly the partitions of |highest| with at
  // most `rank` parts dominated by the highest weight; multiplicities on
  // the rest of the diagram follow by Weyl symmetry
  std::vector<std::vector<long>> dominant;
  {
    std::vector<long> cur;
    std::vector<std::vector<long>> parts;
    if (total == 0) parts.push_back({});
    partitionsInto(total, rank, highest[0], cur, parts);
    for (auto& p : parts) {
      p.resize(rank, 0);
      if (dominatedBy(p, highest)) dominant.push_back(p);
    }
  }
  // closest to the highest weight first (smallest height of the difference)
  std::sort(dominant.begin(), dominant.end(), [&](const auto& a, const auto& b) {
    long ha = 0, hb = 0, runA = 0, runB = 0;
    for (int i = 0; i < rank; ++i) {
      runA += highest[i] - a[i];
      runB += highest[i] - b[i];
      ha += runA;
      hb += runB;
    }
    if (ha != hb) return ha < hb;
    return a > b;
  });

  std::unordered_map<std::uint64_t, long> mult;
  std::vector<long> v(rank), sorted(rank);
  for (auto& muW : dominant) {
    if (muW == highest) {
      mult.emplace(packWeight(muW), 1);
      continue;
    }
    std::vector<long> mr(muW);
    for (int i = 0; i < rank; ++i) mr[i] += rho[i];
    long d = lrNorm - dot(mr, mr);
    if (d <= 0) throw std::logic_error("freudenthal: non-positive denominator");
    long s = 0;
    for (int i = 0; i < rank; ++i) {
      for (int j = i + 1; j < rank; ++j) {
        // positive root alpha = e_i - e_j; walk the unbroken weight string
        // upward, looking multiplicities up at sorted representatives
        v = muW;
        for (;;) {
          v[i] += 1;
          v[j] -= 1;
          if (v[j] < 0) break;
          sorted = v;
          std::sort(sorted.begin(), sorted.end(), std::greater<long>());
          auto it = mult.find(packWeight(sorted));
          if (it == mult.end()) break;
          s += it->second * (v[i] - v[j]);
        }
      }
    }
    if ((2 * s) % d != 0 || s < 0) throw std::logic_error("freudenthal: bad multiplicity");
    long m = (2 * s) / d;
    if (m > 0) mult.emplace(packWeight(muW), m);
  }

  // expand over the Weyl orbits
  CharacterTable table;
  table.rank = rank;
  long running = 0;
  for (auto& [key, m] : mult) {
    std::vector<long> w = unpackWeight(key, rank);
    std::sort(w.begin(), w.end());
    do {
      table.mult.emplace(w, Integer(m));
      running += m;
      if (running > dimensionCap) throw DimensionCapError("freudenthal: dimension cap");
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return table;
}

std::vector<long> glPartition(const Weight& lambda) {
  const int N = lambda.N();
  std::vector<long> p(N, 0);
  long run = 0;
  for (int i = N - 1; i >= 1; --i) {
    run += lambda.omegaCoeff(i);
    p[i - 1] = run;
  }
  return p;
}

namespace {

// character of the block subgroup irreducible with highest weight v
// (weakly decreasing on each block), via two block characters
CharacterTable blockCharacter(const RankPair& g, const std::vector<long>& v, long cap,
                              std::map<std::pair<int, std::vector<long>>, CharacterTable>& memo) {
  auto blockChar = [&](int offset, int size) {
    std::vector<long> h(v.begin() + offset, v.begin() + offset + size);
    long shift = h[size - 1];
    for (auto& x : h) x -= shift;
    auto key = std::make_pair(size, h);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, freudenthal(size, h, cap)).first;
    return std::make_pair(it->second, shift);
  };
  auto [c1, s1] = blockChar(0, g.n);
  auto [c2, s2] = blockChar(g.n, g.m);
  CharacterTable out;
  out.rank = g.N();
  for (auto& [w1, m1] : c1.mult) {
    for (auto& [w2, m2] : c2.mult) {
      std::vector<long> w(g.N());
      for (int i = 0; i < g.n; ++i) w[i] = w1[i] + s1;
      for (int i = 0; i < g.m; ++i) w[g.n + i] = w2[i] + s2;
      out.mult[w] += m1 * m2;
    }
  }
  return out;
}

bool isBlockDominant(const RankPair& g, const std::vector<long>& v) {
  for (int i = 0; i + 1 < g.n; ++i)
    if (v[i] < v[i + 1]) return false;
  for (int i = g.n; i + 1 < g.N(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

}  // namespace

std::vector<std::pair<std::vector<long>, long>> kTypeDecomposition(const RankPair& g,
                                                                   const Weight& lambda,
                                                                   long dimensionCap) {
  if (!lambda.isDominant()) throw std::invalid_argument("kTypeDecomposition: non-dominant");
  if (weylDim(lambda) > dimensionCap)
    throw DimensionCapError("kTypeDecomposition: dimension cap");

  CharacterTable rest = freudenthal(g.N(), glPartition(lambda), dimensionCap);
  std::map<std::pair<int, std::vector<long>>, CharacterTable> memo;
  std::vector<std::pair<std::vector<long>, long>> out;
  while (!rest.mult.empty()) {
    auto top = rest.mult.rbegin();
    std::vector<long> v = top->first;
    Integer m = top->second;
    if (m < 0) throw std::logic_error("kTypeDecomposition: negative leading multiplicity");
    if (!isBlockDominant(g, v))
      throw std::logic_error("kTypeDecomposition: leading weight not block dominant");
    CharacterTable kchar = blockCharacter(g, v, dimensionCap, memo);
    for (auto& [w, km] : kchar.mult) {
      auto it = rest.mult.find(w);
      Integer sub = m * km;
      if (it == rest.mult.end() || it->second < sub)
        throw std::logic_error("kTypeDecomposition: peeling below zero");
      it->second -= sub;
      if (it->second == 0) rest.mult.erase(it);
    }
    // normalize modulo the determinant direction
    long shift = v.back();
    for (auto& x : v) x -= shift;
    out.emplace_back(std::move(v), m.get_si());
  }
  return out;
}

long branchMultiplicity(const RankPair& g, const Weight& lambda, const MuSpec& mu,
                        long dimensionCap) {
  std::vector<long> target = glPartition(mu.muWeight());
  long shift = target.back();
  for (auto& x : target) x -= shift;
  long found = 0;
  for (auto& [ktype, m] : kTypeDecomposition(g, lambda, dimensionCap))
    if (ktype == target) found += m;
  return found;
}

bool tensorCheckGdec(const RankPair& g, int c, int d, long dimensionCap) {
  const int N = g.N();
  if (c < 0 || d < 0 || c > N || d > N || c > N - d)
    throw std::invalid_argument("tensorCheckGdec: indices");
  std::vector<long> p1(N, 0), p2(N, 0);
  for (int i = 0; i < c; ++i) p1[i] = 1;
  for (int i = 0; i < N - d; ++i) p2[i] = 1;
  CharacterTable c1 = freudenthal(N, p1, dimensionCap);
  CharacterTable c2 = freudenthal(N, p2, dimensionCap);

  std::map<std::vector<long>, Integer> prod;
  for (auto& [w1, m1] : c1.mult)
    for (auto& [w2, m2] : c2.mult) {
      std::vector<long> w(N);
      for (int i = 0; i < N; ++i) w[i] = w1[i] + w2[i];
      prod[w] += m1 * m2;
    }

  Integer dimLHS = weylDim(Weight::fundamental(N, c)) * weylDim(Weight::fundamental(N, N - d));
  Integer dimRHS(0);
  for (int i = 0; i <= std::min(c, d); ++i) {
    Weight s = Weight::fundamental(N, c - i) + Weight::fundamental(N, N - d + i);
    dimRHS += weylDim(s);
    // partition in the same box count as p1 + p2 (omega_N enters as det)
    std::vector<long> q(N, 0);
    for (int k = 0; k < N; ++k) q[k] = (k < c - i ? 1 : 0) + (k < N - d + i ? 1 : 0);
    for (auto& [w, m] : freudenthal(N, q, dimensionCap).mult) {
      auto it = prod.find(w);
      if (it == prod.end() || it->second < m) return false;
      it->second -= m;
      if (it->second == 0) prod.erase(it);
    }
  }
  return prod.empty() && dimLHS == dimRHS;
}

bool mTypeCheck(const MuSpec& mu) {
  MTypeBasis basis = MTypeBasis::build(mu);
  std::vector<std::vector<long>> chars;
  for (auto& label : basis.labels) {
    std::vector<long> c(mu.g.n, mu.b);
    if (mu.isRankOne()) {
      for (int i = 0; i < mu.g.n; ++i) c[i] += label[i];
    } else {
      for (int h : label) c[h - 1] += 1;
    }
    chars.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < chars.size(); ++a)
    for (std::size_t b = a + 1; b < chars.size(); ++b)
      if (chars[a] == chars[b]) return false;
  return true;
}

}  // namespace mvsf
