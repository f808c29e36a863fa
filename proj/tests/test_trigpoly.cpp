#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mvsf/trigpoly.hpp"

using namespace mvsf;

namespace {

TrigPoly randomTrig(std::mt19937_64& rng, int nvars, int maxAbsExp, int nterms) {
  std::uniform_int_distribution<int> de(-maxAbsExp, maxAbsExp);
  std::uniform_int_distribution<int> dc(-6, 6);
  TrigPoly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    TrigPoly::Exp e(nvars);
    for (auto& x : e) x = de(rng);
    GaussRational c(rat(dc(rng), 1 + std::abs(dc(rng))), rat(dc(rng), 3));
    p += TrigPoly::monomial(nvars, e, c);
  }
  return p;
}

TrigPoly randomRealTrig(std::mt19937_64& rng, int nvars, int maxAbsExp, int nterms) {
  TrigPoly p = randomTrig(rng, nvars, maxAbsExp, nterms);
  TrigPoly q = p + p.conjugate();
  return q;
}

}  // namespace

TEST_CASE("cos monomial expansions") {
  // e=(1,0) -> (z1 + z1^-1)/2
  TrigPoly c1 = cosMonomial({1, 0});
  CHECK(c1.coeff({1, 0}) == GaussRational(Rational(1, 2)));
  CHECK(c1.coeff({-1, 0}) == GaussRational(Rational(1, 2)));
  CHECK(c1.termCount() == 2);

  // e=(2) -> (z^2 + 2 + z^-2)/4
  TrigPoly c2 = cosMonomial({2});
  CHECK(c2.coeff({2}) == GaussRational(Rational(1, 4)));
  CHECK(c2.coeff({0}) == GaussRational(Rational(1, 2)));
  CHECK(c2.coeff({-2}) == GaussRational(Rational(1, 4)));

  // e=0 -> 1
  CHECK(cosMonomial({0, 0}) == TrigPoly::one(2));
}

TEST_CASE("derivative basics") {
  TrigPoly c = TrigPoly::cosT(1, 1);
  TrigPoly s = TrigPoly::sinT(1, 1);
  CHECK(c.ddt(1) == -s);
  CHECK(s.ddt(1) == c);
  CHECK(TrigPoly::one(1).ddt(1).isZero());
  // cos^2 t -> -sin 2t
  CHECK((c * c).ddt(1) == -TrigPoly::sinLin(1, {2}));
  CHECK((c * c).ddt(1) == GaussRational(-2) * s * c);
}

TEST_CASE("exact division") {
  int n = 2;
  TrigPoly s1 = TrigPoly::sinT(n, 1);
  TrigPoly c1 = TrigPoly::cosT(n, 1);
  TrigPoly one = TrigPoly::one(n);

  CHECK(TrigPoly::exactDiv(one - c1 * c1, s1 * s1) == one);

  // (cos^2 t2 - cos^2 t1) / (sin(t1+t2) sin(t1-t2)) = 1
  TrigPoly c2 = TrigPoly::cosT(n, 2);
  TrigPoly num = c2 * c2 - c1 * c1;
  TrigPoly den = TrigPoly::sinLin(n, {1, 1}) * TrigPoly::sinLin(n, {1, -1});
  CHECK(TrigPoly::exactDiv(num, den) == one);

  CHECK_THROWS_AS(TrigPoly::exactDiv(c1, s1), NonDivisibleError);
}

TEST_CASE("ring axioms and division on random elements") {
  std::mt19937_64 rng(20230804);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + (iter % 3);
    TrigPoly a = randomTrig(rng, n, 3, 4);
    TrigPoly b = randomTrig(rng, n, 3, 4);
    TrigPoly c = randomTrig(rng, n, 2, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.isZero()) CHECK(TrigPoly::exactDiv(a * b, b) == a);
    // sin^2(t1 - t2)-style cancellation
    if (n == 2 && !a.isZero()) {
      TrigPoly d = TrigPoly::sinLin(2, {1, -1});
      CHECK(TrigPoly::exactDiv(d * d * a, d * d) == a);
    }
  }
}

TEST_CASE("Leibniz rule") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 1 + (iter % 2);
    TrigPoly a = randomTrig(rng, n, 3, 4);
    TrigPoly b = randomTrig(rng, n, 3, 4);
    CHECK((a * b).ddt(1) == a.ddt(1) * b + a * b.ddt(1));
  }
}

TEST_CASE("realness is preserved") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 1 + (iter % 2);
    TrigPoly a = randomRealTrig(rng, n, 3, 4);
    TrigPoly b = randomRealTrig(rng, n, 3, 4);
    CHECK(a.isRealValued());
    CHECK((a + b).isRealValued());
    CHECK((a * b).isRealValued());
    CHECK(a.ddt(1).ddt(1).isRealValued());
  }
}

TEST_CASE("value at zero") {
  CHECK(TrigPoly::sinT(1, 1).evalAtZero().isZero());
  // psi_i at 0 counts i-subsets
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      CHECK(psiElem(n, i).evalAtZero() == GaussRational(Rational(binomial(n, i))));
}

TEST_CASE("cos polynomial conversion") {
  TrigPoly c1 = TrigPoly::cosT(2, 1);
  CosPoly p = c1.toCos();
  CHECK(p.terms().size() == 1);
  CHECK(p.terms().begin()->first == std::vector<int>{1, 0});
  CHECK(p.terms().begin()->second == 1);

  CHECK_THROWS_AS(TrigPoly::sinT(2, 1).toCos(), NotCosPolynomialError);

  // psi_2 for n=2 is cos^2 t1 cos^2 t2
  CosPoly p2 = psiElem(2, 2).toCos();
  CHECK(p2.terms().size() == 1);
  CHECK(p2.terms().begin()->first == std::vector<int>{2, 2});
  CHECK(p2.terms().begin()->second == 1);

  // round trip on random cos polynomials
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> de(0, 3), dc(-5, 5);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 1 + (iter % 3);
    CosPoly q(n);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> e(n);
      for (auto& x : e) x = de(rng);
      q += CosPoly::monomial(n, e, rat(dc(rng), 1 + std::abs(dc(rng))));
    }
    CHECK(q.toTrig().toCos() == q);
  }
}

TEST_CASE("variable permutation and sign flip") {
  TrigPoly p = TrigPoly::cosT(3, 1) * TrigPoly::sinT(3, 2);
  TrigPoly q = p.permuteVars({2, 3, 1});  // t1->t2, t2->t3, t3->t1
  CHECK(q == TrigPoly::cosT(3, 2) * TrigPoly::sinT(3, 3));
  CHECK(p.permuteVars({1, 2, 3}) == p);
  CHECK(p.negateVar(2) == -p);
  CHECK(p.negateVar(1) == p);
}

TEST_CASE("psi exclusion identities") {
  // psi_i^{(H u j)} + cos^2 t_j psi_{i-1}^{(H u j)} = psi_i^{(H)}
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> H = {2};
    for (int i = 1; i <= n - 2; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (j == 2) continue;
        std::vector<int> Hj = H;
        Hj.push_back(j);
        TrigPoly lhs = psiElem(n, i, Hj) +
                       TrigPoly::cosT(n, j).pow(2) * psiElem(n, i - 1, Hj);
        CHECK(lhs == psiElem(n, i, H));
      }
    }
  }
}
