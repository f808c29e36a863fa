#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvsf/bottoms.hpp"
#include "mvsf/weights.hpp"

using namespace mvsf;

namespace {

// Independent oracle for fundamental weights: solve <x, alpha_j> = delta_ij
// with zero coordinate sum by Gaussian elimination over the rationals.
std::vector<Rational> fundamentalByLinearSolve(int N, int i) {
  int rows = N, cols = N;
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1, Rational(0)));
  // <x, e_j - e_{j+1}> = x_j - x_{j+1} = delta_ij
  for (int j = 1; j <= N - 1; ++j) {
    A[j - 1][j - 1] = 1;
    A[j - 1][j] = -1;
    A[j - 1][cols] = (j == i) ? 1 : 0;
  }
  for (int k = 0; k < N; ++k) A[N - 1][k] = 1;  // sum = 0
  // forward elimination with partial pivoting on nonzero entries
  int r = 0;
  std::vector<int> pivotCol;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int k = r; k < rows; ++k)
      if (A[k][c] != 0) {
        pr = k;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[r], A[pr]);
    Rational inv = 1 / A[r][c];
    for (int k = c; k <= cols; ++k) A[r][k] *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r || A[k][c] == 0) continue;
      Rational f = A[k][c];
      for (int t = c; t <= cols; ++t) A[k][t] -= f * A[r][t];
    }
    pivotCol.push_back(c);
    ++r;
  }
  std::vector<Rational> x(N, Rational(0));
  for (std::size_t k = 0; k < pivotCol.size(); ++k) x[pivotCol[k]] = A[k][cols];
  return x;
}

}  // namespace

TEST_CASE("fundamental weights in epsilon coordinates") {
  CHECK(omegaInEps(3, 1) == std::vector<Rational>{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});
  CHECK(omegaInEps(2, 1) == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});

  for (int N = 2; N <= 6; ++N) {
    for (int i = 1; i <= N - 1; ++i) {
      auto v = omegaInEps(N, i);
      CHECK(v == fundamentalByLinearSolve(N, i));
      Rational s(0);
      for (auto& x : v) s += x;
      CHECK(s == 0);
      // <omega_i, alpha_j> = delta_ij
      for (int j = 1; j <= N - 1; ++j) {
        Rational pairing = v[j - 1] - v[j];
        CHECK(pairing == ((i == j) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("inner product") {
  Weight w1 = Weight::fundamental(2, 1);
  CHECK(inner(w1, w1) == Rational(1, 2));
  Weight z = Weight::zero(5);
  Weight l = Weight::fundamental(5, 2);
  CHECK(inner(l, z) == 0);
  CHECK_THROWS(inner(w1, l));
}

TEST_CASE("rho") {
  CHECK(rho(2) == Weight::fundamental(2, 1));
  CHECK(rho(3) == Weight::fundamental(3, 1) + Weight::fundamental(3, 2));
  CHECK(rho(2).eps() == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
}

TEST_CASE("casimir eigenvalues") {
  // SU(2): lambda = 2 omega_1
  CHECK(casimirEigenvalue(Weight::fundamental(2, 1) * 2) == 4);
  // (n,m)=(2,3): lambda_1 = omega_1 + omega_4
  RankPair g(2, 3);
  CHECK(casimirEigenvalue(sphericalGenerator(g, 1)) == 10);
  CHECK(casimirEigenvalue(Weight::zero(4)) == 0);
  // spherical generators have eigenvalue 2 i (m+n-i+1)
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    RankPair gg(n, m);
    for (int i = 1; i <= n; ++i)
      CHECK(casimirEigenvalue(sphericalGenerator(gg, i)) == Rational(2 * i * (m + n - i + 1)));
  }
}

TEST_CASE("dominance order") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {2, 3}}) {
    RankPair g(n, m);
    Weight l1 = sphericalGenerator(g, 1);
    CHECK(dominanceLeq(Weight::zero(g.N()), l1));
    auto c = alphaCoords(l1);
    for (auto& x : c) CHECK(x == 1);
    CHECK(dominanceLeq(l1, l1));
  }
  // (2,3): nu_1 = omega_2 + omega_4 dominates nu_0 = omega_1
  RankPair g(2, 3);
  Weight nu0 = Weight::fundamental(5, 1);
  Weight nu1 = Weight::fundamental(5, 2) + Weight::fundamental(5, 4);
  CHECK(dominanceLeq(nu0, nu1));
  CHECK_FALSE(dominanceLeq(nu1, nu0));
}

TEST_CASE("dominance is a partial order on enumerated sets") {
  RankPair g(2, 2);
  auto labels = enumeratePgMu(MuSpec::wedge(g, 1, 0), 2);
  std::vector<Weight> ws;
  for (auto& l : labels) ws.push_back(l.total);
  for (auto& a : ws) {
    CHECK(dominanceLeq(a, a));
    for (auto& b : ws) {
      if (dominanceLeq(a, b) && dominanceLeq(b, a)) CHECK(a == b);
      for (auto& c : ws) {
        if (dominanceLeq(a, b) && dominanceLeq(b, c)) CHECK(dominanceLeq(a, c));
      }
    }
  }
}

TEST_CASE("eigenvalue separation on enumerated spectra") {
  for (auto [n, m] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {
    RankPair g(n, m);
    for (auto mu : {MuSpec::wedge(g, 1, 1), MuSpec::rankOne(g, 2, 0)}) {
      auto labels = enumeratePgMu(mu, 2);
      for (auto& a : labels)
        for (auto& b : labels)
          if (a.total != b.total && dominanceLeq(b.total, a.total))
            CHECK(a.eigenvalue > b.eigenvalue);
    }
  }
}

TEST_CASE("weyl dimension") {
  CHECK(weylDim(Weight::fundamental(2, 1) * 2) == 3);
  CHECK(weylDim(rho(3)) == 8);
  CHECK(weylDim(Weight::fundamental(5, 1) + Weight::fundamental(5, 4)) == 24);
  // adjoint of SU(N) for every rank pair
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
    RankPair g(n, m);
    CHECK(weylDim(sphericalGenerator(g, 1)) == Integer((n + m) * (n + m) - 1));
  }
  CHECK_THROWS(weylDim(Weight::zero(3) - Weight::fundamental(3, 1)));
}

TEST_CASE("restriction to A") {
  RankPair g(3, 4);
  CHECK(restrictToA(g, Weight::fundamental(7, 1)) == std::vector<long>{1, 0, 0});
  CHECK(restrictToA(g, Weight::fundamental(7, 2)) == std::vector<long>{1, 1, 0});
  for (int i = 1; i <= g.n; ++i) {
    Weight w = Weight::fundamental(7, i) + Weight::fundamental(7, 7 - i);
    std::vector<long> expect(3, 0);
    for (int j = 0; j < i; ++j) expect[j] = 2;
    CHECK(restrictToA(g, w) == expect);
    CHECK(restrictToA(g, Weight::fundamental(7, i)) ==
          restrictToA(g, Weight::fundamental(7, 7 - i)));
  }
  // additive on the folded lattice
  Weight u = Weight::fundamental(7, 2) + Weight::fundamental(7, 6) * 2;
  Weight v = Weight::fundamental(7, 3);
  auto ru = restrictToA(g, u), rv = restrictToA(g, v), rs = restrictToA(g, u + v);
  for (int j = 0; j < 3; ++j) CHECK(rs[j] == ru[j] + rv[j]);
  // (2,4): omega_3 restricts through the middle block and is out of range
  CHECK_THROWS(restrictToA(RankPair(2, 4), Weight::fundamental(6, 3)));
}
