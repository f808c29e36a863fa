#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvsf/orthogonality.hpp"

using namespace mvsf;

namespace {

// one-variable radial operator, written out directly for cross-checking
TrigPoly radialOneVar(const RankPair& g, const TrigPoly& f) {
  TrigPoly d1 = f.ddt(1);
  TrigPoly out = f.ddt(1).ddt(1) * GaussRational(rat(-1, 2));
  if (g.m > g.n) {
    TrigPoly num = TrigPoly::cosT(1, 1) * d1 * GaussRational(Rational(-(g.m - g.n)));
    out += TrigPoly::exactDiv(num * TrigPoly::sinT(1, 1),
                              TrigPoly::sinT(1, 1) * TrigPoly::sinT(1, 1));
  }
  TrigPoly s2 = TrigPoly::sinLin(1, {2}), c2 = TrigPoly::cosLin(1, {2});
  out += TrigPoly::exactDiv(-(c2 * d1) * s2, s2 * s2);
  return out;
}

}  // namespace

TEST_CASE("zonal closed form") {
  // phi_0 = 1 always
  for (auto [n, m] : {std::pair{1, 1}, {2, 3}}) {
    ZonalForm z = zonalPhi(RankPair(n, m), 0);
    CHECK(z.func == TrigPoly::one(n));
  }
  // n=1, m=2: phi_1 = (3 cos^2 t - 1)/2, eigenvalue 6 by direct differentiation
  {
    RankPair g(1, 2);
    ZonalForm z = zonalPhi(g, 1);
    TrigPoly expect =
        psiElem(1, 1) * GaussRational(rat(3, 2)) - TrigPoly::constant(1, GaussRational(rat(1, 2)));
    CHECK(z.func == expect);
    CHECK(radialOneVar(g, z.func) == GaussRational(6) * z.func);
  }
  // n=m=1: phi_1 = cos 2t
  {
    ZonalForm z = zonalPhi(RankPair(1, 1), 1);
    CHECK(z.func == TrigPoly::cosLin(1, {2}));
  }
  // phi_i(0) = 1 and R phi_i = 2i(m+n-i+1) phi_i in general
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    RankPair g(n, m);
    RadialOperator R(MuSpec::wedge(g, 0, 0));
    for (int i = 0; i <= n; ++i) {
      ZonalForm z = zonalPhi(g, i);
      CHECK(z.func.evalAtZero() == GaussRational(1));
      DiagFunc f{{z.func}};
      CHECK(R.apply(f) == f.scaled(GaussRational(Rational(2 * i * (m + n - i + 1)))));
    }
  }
}

TEST_CASE("solver reproduces the zonal functions") {
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    RankPair g(n, m);
    SphericalSolver solver(MuSpec::wedge(g, 0, 0));
    for (int i = 1; i <= n; ++i) {
      SphericalFunction phi = solver.solve(sphericalGenerator(g, i));
      CHECK(phi.entries.entries[0] == zonalPhi(g, i).func);
      CHECK(phi.eigenvalue == Rational(2 * i * (m + n - i + 1)));
    }
  }
}

TEST_CASE("ladder solver matches the explicit coefficients") {
  // mu = omega_1 + b omega_n: Phi_{nu_i} = l sum_j k_j Q_{nu_j}
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    RankPair g(n, m);
    for (int b = 0; b <= 1; ++b) {
      MuSpec mu = MuSpec::wedge(g, 1, b);
      SphericalSolver solver(mu);
      auto bottoms = bottomSet(mu);
      for (int i = 0; i <= n - 1; ++i) {
        SphericalFunction phi = solver.solve(
            SpectrumLabel{bottoms[i], std::vector<int>(g.n, 0), bottoms[i].weight,
                          casimirEigenvalue(bottoms[i].weight)});
        REQUIRE((int)phi.span.size() == i + 1);
        Rational l = pochhammer(Rational(m + n + b - 2 * i + 1), i) /
                     (Rational(binomial(n - 1, i)) * pochhammer(Rational(-m), i));
        if (i % 2 != 0) l = -l;
        for (int j = 0; j <= i; ++j) {
          Rational kj = pochhammer(Rational(n - i), i - j) * pochhammer(Rational(n + b - i), i - j);
          kj /= Rational(factorial(i - j)) * pochhammer(Rational(m + n + b - 2 * i + 1), i - j);
          if ((i - j) % 2 != 0) kj = -kj;
          CHECK(phi.expansion[j] == GaussRational(l * kj));
        }
      }
    }
  }
}

TEST_CASE("solved functions are exact eigenfunctions with identity at zero") {
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}}) {
    RankPair g(n, m);
    for (auto mu : {MuSpec::wedge(g, 2, 1), MuSpec::rankOne(g, 2, 0)}) {
      SphericalSolver solver(mu);
      for (auto& label : enumeratePgMu(mu, 1)) {
        SphericalFunction phi = solver.solve(label);
        for (auto& e : phi.entries.entries) CHECK(e.evalAtZero() == GaussRational(1));
        // triangular expansion with nonzero leading coefficient
        CHECK_FALSE(phi.expansion.back().isZero());
        // eigenfunction identity is asserted inside solve; check again
        CHECK(solver.radial().apply(phi.entries) ==
              phi.entries.scaled(GaussRational(phi.eigenvalue)));
      }
    }
  }
}

TEST_CASE("F basis small cases") {
  // bound 0 gives the bottom approximants only
  RankPair g(2, 3);
  MuSpec mu = MuSpec::wedge(g, 1, 0);
  SphericalSolver solver(mu);
  auto F0 = solver.buildFBasis(0);
  CHECK(F0.size() == bottomSet(mu).size());
  for (auto& e : F0) CHECK(e.label.degreeSum() == 0);

  // mu = 0, n = 1: the basis is the powers of psi_1
  RankPair g1(1, 2);
  SphericalSolver zonal(MuSpec::wedge(g1, 0, 0));
  auto Fz = zonal.buildFBasis(3);
  REQUIRE(Fz.size() == 4);
  for (int d = 0; d <= 3; ++d) CHECK(Fz[d].func.entries[0] == psiElem(1, 1).pow(d));
}

TEST_CASE("F basis leading exponents") {
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}}) {
    RankPair g(n, m);
    for (auto mu : {MuSpec::wedge(g, 1, 0), MuSpec::wedge(g, 2, 1), MuSpec::rankOne(g, 2, 1)}) {
      // construction itself verifies the exponents; spot-check distinctness
      auto F = SphericalSolver(mu).buildFBasis(1);
      for (std::size_t a = 0; a < F.size(); ++a)
        for (std::size_t b = a + 1; b < F.size(); ++b)
          if (dominanceLt(F[a].label.total, F[b].label.total) ||
              dominanceLt(F[b].label.total, F[a].label.total))
            CHECK(restrictToA(g, F[a].label.total) != restrictToA(g, F[b].label.total));
    }
  }
  // incomparable labels can share a restriction (rank-one, a = 2); the
  // basis still builds and the solver still works through it
  RankPair g22(2, 2);
  MuSpec mu = MuSpec::rankOne(g22, 2, 0);
  auto F = SphericalSolver(mu).buildFBasis(1);
  bool foundEqualPair = false;
  for (std::size_t a = 0; a < F.size(); ++a)
    for (std::size_t b = a + 1; b < F.size(); ++b)
      if (restrictToA(g22, F[a].label.total) == restrictToA(g22, F[b].label.total))
        foundEqualPair = true;
  CHECK(foundEqualPair);
}

TEST_CASE("the two construction paths agree where the families overlap") {
  // mu = omega_1 + b omega_n is rank-one with a = 1 and wedge with s = 1;
  // the solved functions must coincide even though the approximants are
  // built by the tensor engine on one side and closed forms on the other
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}}) {
    RankPair g(n, m);
    for (int b = 0; b <= 1; ++b) {
      SphericalSolver viaEngine(MuSpec::rankOne(g, 1, b));
      SphericalSolver viaClosedForm(MuSpec::wedge(g, 1, b));
      for (auto& label : enumeratePgMu(MuSpec::wedge(g, 1, b), 1)) {
        SphericalFunction a = viaEngine.solve(label.total);
        SphericalFunction c = viaClosedForm.solve(label.total);
        CHECK(a.entries == c.entries);
        CHECK(a.eigenvalue == c.eigenvalue);
      }
    }
  }
}

TEST_CASE("weyl fill") {
  RankPair g(3, 4);
  MuSpec mu = MuSpec::wedge(g, 1, 1);
  // identity on the first label
  TrigPoly first = qLadderEntry(mu, 1, {1});
  CHECK(weylFill(mu, first, {1}) == first);
  // reproduces the ladder entry for every H
  for (int i = 0; i <= g.n - 1; ++i) {
    TrigPoly f1 = qLadderEntry(mu, i, {1});
    for (auto& H : MTypeBasis::build(mu).labels)
      CHECK(weylFill(mu, f1, H) == qLadderEntry(mu, i, H));
  }
  // double application with w then w^{-1} is the identity
  MuSpec mu2 = MuSpec::wedge(g, 2, 0);
  TrigPoly f = qLambdaHEntry(mu2, {{1, 0}, {3, 2}}, {}, {1, 2});
  TrigPoly filled = weylFill(mu2, f, {1, 3});
  // {1,3} as target: w = (1,3,2); applying the inverse permutation returns f
  CHECK(filled.permuteVars({1, 3, 2}) == f);

  // multi-run entries match the direct permutation-sum formula
  for (auto& H : MTypeBasis::build(mu2).labels) {
    TrigPoly viaFill = weylFill(mu2, qLambdaHEntry(mu2, {{1, 0}, {3, 2}}, {}, {1, 2}), H);
    CHECK(viaFill == qLambdaHEntry(mu2, {{1, 0}, {3, 2}}, {}, H));
  }
}

TEST_CASE("solves through multi-run bottoms") {
  // n = 3 wedge s = 2 has bottoms with gap patterns whose approximants come
  // from the permutation-sum entries; every label must still solve exactly
  RankPair g(3, 4);
  MuSpec mu = MuSpec::wedge(g, 2, 0);
  SphericalSolver solver(mu);
  bool sawMultiRun = false;
  for (auto& l : enumeratePgMu(mu, 1)) {
    sawMultiRun = sawMultiRun || l.bottom.runs.size() > 1;
    SphericalFunction phi = solver.solve(l);
    CHECK(phi.entries.entries[0].evalAtZero() == GaussRational(1));
  }
  CHECK(sawMultiRun);
}

TEST_CASE("rank one beyond the small parameter range") {
  // a = 3 exercises the m-part bootstrap on a four-dimensional K-type
  RankPair g(2, 3);
  MuSpec mu = MuSpec::rankOne(g, 3, 1);
  CHECK(mu.dimVmuK() == 4);
  SphericalSolver solver(mu);
  auto labels = enumeratePgMu(mu, 1);
  SphericalFunction f0 = solver.solve(labels[0]);
  SphericalFunction f3 = solver.solve(labels[3]);
  CHECK(exactInner(mu, f0.entries, f3.entries) == 0);
  Rational expect =
      Rational(mu.dimVmuK()) * Rational(mu.dimVmuK()) / Rational(weylDim(labels[0].total));
  CHECK(exactInner(mu, f0.entries, f0.entries) == expect);
}

TEST_CASE("braid and quadratic relations") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    CHECK(braidCheck(RankPair(n, m)));
  }
  // explicit s_n^2 = 1
  for (auto [n, m] : {std::pair{2, 2}, {3, 4}}) {
    RankPair g(n, m);
    auto s = weylGenerators(g);
    CHECK(s[n - 1] * s[n - 1] == QMatrix::identity(g.N()));
  }
}
