#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mvsf/oracle.hpp"

using namespace mvsf;

TEST_CASE("freudenthal on small adjoints") {
  // SU(2) adjoint: weights (2,0), (1,1), (0,2) with multiplicity one
  CharacterTable t2 = freudenthal(2, {2, 0});
  CHECK(t2.total() == 3);
  CHECK(t2.at({2, 0}) == 1);
  CHECK(t2.at({1, 1}) == 1);
  CHECK(t2.at({0, 2}) == 1);

  // SU(3) adjoint: zero weight has multiplicity two
  CharacterTable t3 = freudenthal(3, {2, 1, 0});
  CHECK(t3.total() == 8);
  CHECK(t3.at({1, 1, 1}) == 2);
  CHECK(t3.at({2, 1, 0}) == 1);

  // highest weight always has multiplicity one
  CharacterTable t5 = freudenthal(5, {3, 1, 1, 0, 0});
  CHECK(t5.at({3, 1, 1, 0, 0}) == 1);
}

TEST_CASE("character tables are Weyl symmetric and have the right size") {
  for (auto h : {std::vector<long>{2, 0}, {2, 1, 0}, {3, 1, 0, 0}, {2, 2, 1, 0, 0}}) {
    CharacterTable t = freudenthal((int)h.size(), h);
    // total equals the Weyl dimension
    std::vector<long> omega(h.size() - 1);
    for (std::size_t i = 0; i + 1 < h.size(); ++i) omega[i] = h[i] - h[i + 1];
    CHECK(t.total() == weylDim(Weight((int)h.size(), omega)));
    // permutation invariance
    for (auto& [w, m] : t.mult) {
      std::vector<long> s(w);
      std::sort(s.begin(), s.end());
      do {
        CHECK(t.at(s) == m);
      } while (std::next_permutation(s.begin(), s.end()) && s != w);
    }
  }
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(freudenthal(4, {20, 10, 5, 0}, 100), DimensionCapError);
}

TEST_CASE("branching basics") {
  // SU(3) adjoint restricted to S(U(1) x U(2)) contains the trivial type once
  RankPair g(1, 2);
  CHECK(branchMultiplicity(g, sphericalGenerator(g, 1), MuSpec::rankOne(g, 0, 0)) == 1);
  // and the defining K-types of the two families
  CHECK(branchMultiplicity(g, Weight::fundamental(3, 1), MuSpec::rankOne(g, 1, 0)) == 1);
}

TEST_CASE("branching is multiplicity free and matches the spectrum") {
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}}) {
    RankPair g(n, m);
    for (auto mu : {MuSpec::rankOne(g, 1, 0), MuSpec::rankOne(g, 2, 1), MuSpec::wedge(g, 2, 0),
                    MuSpec::wedge(g, 1, 1)}) {
      auto labels = enumeratePgMu(mu, 2);
      std::set<std::vector<long>> inSpec;
      for (auto& l : labels) inSpec.insert(l.total.omega());
      // members have multiplicity exactly one (within the dimension cap)
      for (auto& l : labels) {
        if (weylDim(l.total) > 100000) continue;
        CHECK(branchMultiplicity(g, l.total, mu) == 1);
      }
      // nearby dominant weights obey the 0/1 law and match membership
      int tested = 0;
      for (auto& l : labels) {
        for (int i = 1; i <= g.N() - 1 && tested < 10; ++i) {
          Weight w = l.total + Weight::fundamental(g.N(), i);
          if (!w.isDominant() || inSpec.count(w.omega())) continue;
          if (weylDim(w) > 100000) continue;
          long bm = branchMultiplicity(g, w, mu);
          CHECK(bm == 0);
          ++tested;
        }
      }
    }
  }
}

TEST_CASE("monotonicity under spherical shifts") {
  RankPair g(2, 2);
  MuSpec mu = MuSpec::wedge(g, 1, 0);
  for (auto& l : enumeratePgMu(mu, 1)) {
    for (int i = 1; i <= g.n; ++i) {
      Weight shifted = l.total + sphericalGenerator(g, i);
      if (weylDim(shifted) > 100000) continue;
      CHECK(branchMultiplicity(g, shifted, mu) >= branchMultiplicity(g, l.total, mu));
    }
  }
}

TEST_CASE("tensor decompositions of wedge pairs") {
  // SU(3): 3 (x) 3bar = 8 + 1
  CHECK(tensorCheckGdec(RankPair(1, 2), 1, 1));
  // SU(4): V_{w2} (x) V_{w3} = V_{w2+w3} + V_{w1}, 6*4 = 20 + 4
  CHECK(tensorCheckGdec(RankPair(2, 2), 2, 1));
  CHECK(weylDim(Weight::fundamental(4, 2) + Weight::fundamental(4, 3)) == 20);
  // all small cases in SU(4), SU(5)
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}}) {
    RankPair g(n, m);
    for (int c = 0; c <= 3; ++c)
      for (int d = 0; d <= 3 && c <= g.N() - d; ++d) CHECK(tensorCheckGdec(g, c, d));
  }
}

TEST_CASE("M-type characters are distinct") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
    RankPair g(n, m);
    for (int b = 0; b <= 2; ++b) {
      for (int a = 0; a <= 2; ++a) CHECK(mTypeCheck(MuSpec::rankOne(g, a, b)));
      for (int s = 0; s <= n; ++s) CHECK(mTypeCheck(MuSpec::wedge(g, s, b)));
    }
  }
}
