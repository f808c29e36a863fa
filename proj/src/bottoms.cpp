#include "mvsf/bottoms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace mvsf {

MuSpec MuSpec::rankOne(RankPair g, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("MuSpec: a,b >= 0");
  return MuSpec{g, Family::RankOne, a, b};
}

MuSpec MuSpec::wedge(RankPair g, int s, int b) {
  if (s < 0 || s > g.n || b < 0) throw std::invalid_argument("MuSpec: 0 <= s <= n, b >= 0");
  return MuSpec{g, Family::Wedge, s, b};
}

Weight MuSpec::muWeight() const {
  const int N = g.N();
  Weight w = Weight::zero(N);
  if (isRankOne()) {
    w = Weight::fundamental(N, 1) * p1;
  } else if (p1 >= 1) {
    w = Weight::fundamental(N, p1);
  }
  return w + Weight::fundamental(N, g.n) * b;
}

long MuSpec::dimVmuK() const {
  if (isRankOne()) return binomial(p1 + g.n - 1, g.n - 1).get_si();
  return binomial(g.n, p1).get_si();
}

std::string MuSpec::str() const {
  std::ostringstream os;
  os << (isRankOne() ? "rankone:" : "wedge:") << p1 << "," << b;
  return os.str();
}

std::vector<std::pair<int, int>> runDecomposition(const std::vector<int>& H) {
  std::vector<std::pair<int, int>> runs;
  std::size_t i = 0;
  while (i < H.size()) {
    std::size_t j = i;
    while (j + 1 < H.size() && H[j + 1] == H[j] + 1) ++j;
    runs.emplace_back(H[j], H[i] - 1);  // (x, y) for the run {y+1..x}
    i = j + 1;
  }
  return runs;
}

Weight lambdaH(const MuSpec& mu, const std::vector<int>& H) {
  const int N = mu.g.N();
  Weight w = Weight::fundamental(N, mu.g.n) * mu.b;
  for (auto [x, y] : runDecomposition(H)) {
    w = w + Weight::fundamental(N, x);
    if (y > 0) w = w + Weight::fundamental(N, N - y);
  }
  return w;
}

namespace {

void compositions(int total, int slots, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(total - k, slots - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> allCompositions(int total, int slots) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(total, slots, cur, out);
  return out;
}

std::vector<std::vector<int>> allSubsets(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic on the sorted element tuple, so {1..s} comes first
  std::function<void(int)> rec = [&](int next) {
    if ((int)cur.size() == s) {
      out.push_back(cur);
      return;
    }
    for (int j = next; j <= n; ++j) {
      cur.push_back(j);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

Weight rankOneBottomWeight(const MuSpec& mu, const std::vector<int>& comp) {
  const int N = mu.g.N();
  Weight w = Weight::fundamental(N, mu.g.n) * mu.b;
  for (int i = 1; i <= mu.g.n; ++i) {
    if (comp[i - 1] == 0) continue;
    Weight gen = Weight::fundamental(N, i) + Weight::fundamental(N, N + 1 - i);
    w = w + gen * comp[i - 1];
  }
  return w;
}

bool labelOrderLess(const Rational& ca, const Weight& wa, const Rational& cb, const Weight& wb) {
  if (ca != cb) return ca < cb;
  return wa.omega() < wb.omega();
}

}  // namespace

std::vector<BottomElement> bottomSet(const MuSpec& mu) {
  std::vector<BottomElement> out;
  if (mu.isRankOne()) {
    for (auto& comp : allCompositions(mu.p1, mu.g.n)) {
      BottomElement e;
      e.weight = rankOneBottomWeight(mu, comp);
      e.composition = comp;
      out.push_back(std::move(e));
    }
  } else {
    for (auto& H : allSubsets(mu.g.n, mu.p1)) {
      BottomElement e;
      e.weight = lambdaH(mu, H);
      e.subsetH = H;
      e.runs = runDecomposition(H);
      out.push_back(std::move(e));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const BottomElement& a, const BottomElement& b) {
    return labelOrderLess(casimirEigenvalue(a.weight), a.weight, casimirEigenvalue(b.weight),
                          b.weight);
  });
  return out;
}

std::vector<SpectrumLabel> enumeratePgMu(const MuSpec& mu, int degreeBound) {
  std::vector<SpectrumLabel> out;
  auto bottoms = bottomSet(mu);
  for (auto& bot : bottoms) {
    for (auto& d : allCompositions(degreeBound, mu.g.n + 1)) {
      // first n slots of a composition of the bound = all |d| <= bound
      std::vector<int> deg(d.begin(), d.begin() + mu.g.n);
      SpectrumLabel l;
      l.bottom = bot;
      l.degrees = deg;
      l.total = bot.weight;
      for (int i = 1; i <= mu.g.n; ++i)
        if (deg[i - 1] > 0) l.total = l.total + sphericalGenerator(mu.g, i) * deg[i - 1];
      l.eigenvalue = casimirEigenvalue(l.total);
      out.push_back(std::move(l));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SpectrumLabel& a, const SpectrumLabel& b) {
    return labelOrderLess(a.eigenvalue, a.total, b.eigenvalue, b.total);
  });
  return out;
}

namespace {

// Generator pairs (tau_1, tau_2) of the extended weight monoid for
// mu = a omega_1 + b omega_n. The listing degenerates for n <= 2; the
// reduced lists below keep exactly the distinct generators.
std::vector<std::pair<Weight, Weight>> monoidGenerators(const RankPair& g) {
  const int N = g.N();
  const int n = g.n;
  auto om = [&](int i) { return Weight::fundamental(N, i); };
  std::vector<std::pair<Weight, Weight>> gens;
  for (int i = 1; i <= n - 1; ++i) gens.emplace_back(om(i) + om(N - i), Weight::zero(N));
  gens.emplace_back(om(1), om(1));
  for (int k = 2; k <= n - 1; ++k) gens.emplace_back(om(k) + om(N + 1 - k), om(1));
  if (n >= 2) gens.emplace_back(om(g.m + 1), om(1) - om(n));
  gens.emplace_back(om(g.m), Weight::zero(N) - om(n));
  gens.emplace_back(om(n), om(n));
  std::vector<std::pair<Weight, Weight>> uniq;
  for (auto& g2 : gens) {
    bool seen = false;
    for (auto& u : uniq) seen = seen || (u.first == g2.first && u.second == g2.second);
    if (!seen) uniq.push_back(g2);
  }
  return uniq;
}

// Every generator has a dominant first component, so the residual first
// component must stay in the closed positive root cone; that both prunes
// the search and bounds each coefficient.
bool monoidSearch(const std::vector<std::pair<Weight, Weight>>& gens, std::size_t idx,
                  const Weight& t1, const Weight& t2) {
  if (t1.isZero() && t2.isZero()) return true;
  if (idx == gens.size()) return false;
  auto ca = alphaCoords(t1);
  for (auto& x : ca)
    if (x < 0) return false;
  auto cg = alphaCoords(gens[idx].first);
  long maxc = -1;
  for (std::size_t j = 0; j < cg.size(); ++j) {
    if (cg[j] > 0) {
      Rational q = ca[j] / cg[j];
      long lim = Integer(q.get_num() / q.get_den()).get_si();
      if (maxc < 0 || lim < maxc) maxc = lim;
    }
  }
  if (maxc < 0) maxc = 0;
  for (long c = 0; c <= maxc; ++c) {
    if (monoidSearch(gens, idx + 1, t1 - gens[idx].first * c, t2 - gens[idx].second * c))
      return true;
  }
  return false;
}

}  // namespace

bool extendedMonoidCheck(const MuSpec& mu, const Weight& lambda) {
  if (!mu.isRankOne()) throw std::invalid_argument("extendedMonoidCheck: RankOne family only");
  auto gens = monoidGenerators(mu.g);
  return monoidSearch(gens, 0, lambda, mu.muWeight());
}

std::vector<SpectrumLabel> dominanceIdeal(const MuSpec& mu, const Weight& lambda) {
  // alpha_1 coordinate is additive and each spherical generator contributes
  // exactly one, so it bounds |d| over the ideal.
  auto a1 = alphaCoords(lambda)[0];
  Rational minBottom;
  bool first = true;
  for (auto& b : bottomSet(mu)) {
    auto c = alphaCoords(b.weight)[0];
    if (first || c < minBottom) {
      minBottom = c;
      first = false;
    }
  }
  Rational slack = a1 - minBottom;
  long bound = slack < 0 ? 0 : Integer(slack.get_num() / slack.get_den()).get_si();
  std::vector<SpectrumLabel> out;
  for (auto& l : enumeratePgMu(mu, (int)bound)) {
    if (dominanceLeq(l.total, lambda)) out.push_back(l);
  }
  return out;
}

}  // namespace mvsf
