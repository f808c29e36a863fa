#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mvsf/cache.hpp"
#include "mvsf/spherical.hpp"

using namespace mvsf;

TEST_CASE("json round trips") {
  // rationals and weights
  Rational r = rat(-7, 12);
  CHECK(rationalFromJson(toJson(r)) == r);
  Weight w(5, {1, 0, 2, 1});
  CHECK(weightFromJson(5, toJson(w)) == w);

  // trig polynomials, including Gaussian coefficients
  TrigPoly p = TrigPoly::cosT(2, 1) * TrigPoly::sinT(2, 2) +
               TrigPoly::constant(2, GaussRational(rat(3, 7), rat(-1, 2)));
  CHECK(trigFromJson(toJson(p)) == p);

  // diagonal functions
  DiagFunc f{std::vector<TrigPoly>{psiElem(2, 1), psiElem(2, 2)}};
  CHECK(diagFromJson(toJson(f)) == f);
}

TEST_CASE("serialization is deterministic") {
  RankPair g(2, 2);
  MuSpec mu = MuSpec::wedge(g, 1, 0);
  SphericalSolver solver(mu);
  auto labels = enumeratePgMu(mu, 1);
  std::string a = sphericalToJson(mu, solver.solve(labels[2])).dump();
  std::string b = sphericalToJson(mu, solver.solve(labels[2])).dump();
  CHECK(a == b);
}

TEST_CASE("cache keys") {
  Json p1, p2;
  p1["n"] = 2;
  p1["degrees"] = std::vector<int>{1, 0};
  p2["n"] = 2;
  p2["degrees"] = std::vector<int>{0, 1};
  CHECK(cacheKey("spherical", p1) == cacheKey("spherical", p1));
  CHECK(cacheKey("spherical", p1) != cacheKey("spherical", p2));
  CHECK(cacheKey("bottom", p1) != cacheKey("spherical", p1));
}

TEST_CASE("cache store, load and corruption handling") {
  auto dir = std::filesystem::temp_directory_path() / "mvsf-cache-test";
  std::filesystem::remove_all(dir);
  ResultCache cache(dir);
  REQUIRE(cache.enabled());

  TrigPoly p = psiElem(2, 1) * TrigPoly::cosT(2, 2);
  Json payload = toJson(p);
  std::string key = cacheKey("unit", payload);
  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, payload);
  auto hit = cache.load(key);
  REQUIRE(hit.has_value());
  CHECK(trigFromJson(*hit) == p);
  // bit-identical payloads on reload
  cache.store(key, payload);
  CHECK(hit->dump() == cache.load(key)->dump());

  // corrupt the file: must read as a miss
  {
    std::ofstream out(dir / (key + ".json"), std::ios::app);
    out << "garbage";
  }
  CHECK_FALSE(cache.load(key).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("disabled cache is inert") {
  ResultCache cache;
  CHECK_FALSE(cache.enabled());
  cache.store("abc", Json::object());
  CHECK_FALSE(cache.load("abc").has_value());
}
