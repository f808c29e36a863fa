#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mvsf/cache.hpp"
#include "mvsf/oracle.hpp"
#include "mvsf/orthogonality.hpp"
#include "mvsf/selftest.hpp"

using namespace mvsf;

namespace {

struct CommonOpts {
  int n = 1, m = 1;
  std::string mu = "wedge:0,0";
  std::string format = "json";
  std::string cacheDir;
};

MuSpec parseMu(const RankPair& g, const std::string& s) {
  auto colon = s.find(':');
  auto comma = s.find(',', colon);
  if (colon == std::string::npos || comma == std::string::npos)
    throw CLI::ValidationError("--mu expects family:p,b (e.g. wedge:1,0 or rankone:2,1)");
  std::string fam = s.substr(0, colon);
  int p = std::stoi(s.substr(colon + 1, comma - colon - 1));
  int b = std::stoi(s.substr(comma + 1));
  if (fam == "wedge") return MuSpec::wedge(g, p, b);
  if (fam == "rankone") return MuSpec::rankOne(g, p, b);
  throw CLI::ValidationError("--mu family must be wedge or rankone");
}

ResultCache cacheFor(const CommonOpts& o) {
  if (!o.cacheDir.empty()) return ResultCache(o.cacheDir);
  return ResultCache::fromEnvironment();
}

void addCommon(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "size of the first block")->required();
  cmd->add_option("--m", o.m, "size of the second block (m >= n)")->required();
  cmd->add_option("--mu", o.mu, "K-type family:parameters, wedge:s,b or rankone:a,b");
  cmd->add_option("--format", o.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--cache-dir", o.cacheDir, "result cache directory (or MVSF_CACHE_DIR)");
}

void emit(const Json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(1) << "\n";
  } else {
    // shallow table rendering for quick inspection
    std::function<void(const Json&, int)> walk = [&](const Json& v, int depth) {
      std::string pad(2 * depth, ' ');
      if (v.is_object()) {
        for (auto& [k, val] : v.items()) {
          if (val.is_primitive()) {
            std::cout << pad << k << ": " << val.dump() << "\n";
          } else {
            std::cout << pad << k << ":\n";
            walk(val, depth + 1);
          }
        }
      } else if (v.is_array()) {
        for (auto& val : v) {
          if (val.is_primitive()) {
            std::cout << pad << "- " << val.dump() << "\n";
          } else {
            std::cout << pad << "-\n";
            walk(val, depth + 1);
          }
        }
      } else {
        std::cout << pad << v.dump() << "\n";
      }
    };
    walk(j, 0);
  }
}

int runBottom(const CommonOpts& o, int degree) {
  RankPair g(o.n, o.m);
  MuSpec mu = parseMu(g, o.mu);
  Json out = Json::array();
  for (auto& l : enumeratePgMu(mu, degree)) {
    Json e;
    e["weight"] = toJson(l.total);
    e["eigenvalue"] = ratStr(l.eigenvalue);
    e["label"] = toJson(l);
    out.push_back(std::move(e));
  }
  emit(out, o.format);
  return 0;
}

int runSpherical(const CommonOpts& o, int bottomIndex, const std::string& degreesArg,
                 bool emitSamples) {
  RankPair g(o.n, o.m);
  MuSpec mu = parseMu(g, o.mu);
  auto bottoms = bottomSet(mu);
  if (bottomIndex < 0 || bottomIndex >= (int)bottoms.size())
    throw CLI::ValidationError("--bottom index out of range");
  std::vector<int> degrees(g.n, 0);
  if (!degreesArg.empty()) {
    std::stringstream ss(degreesArg);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',') && i < g.n) degrees[i++] = std::stoi(tok);
  }
  SpectrumLabel label;
  label.bottom = bottoms[bottomIndex];
  label.degrees = degrees;
  label.total = label.bottom.weight;
  for (int i = 1; i <= g.n; ++i)
    if (degrees[i - 1] > 0) label.total = label.total + sphericalGenerator(g, i) * degrees[i - 1];
  label.eigenvalue = casimirEigenvalue(label.total);

  Json params;
  params["n"] = o.n;
  params["m"] = o.m;
  params["mu"] = mu.str();
  params["bottom"] = toJson(label.bottom.weight);
  params["degrees"] = degrees;
  std::string key = cacheKey("spherical", params);
  ResultCache cache = cacheFor(o);
  Json out;
  if (auto hit = cache.load(key)) {
    out = *hit;
  } else {
    SphericalSolver solver(mu);
    out = sphericalToJson(mu, solver.solve(label));
    cache.store(key, out);
  }
  if (emitSamples) {
    // small evaluation grid for external plotting
    SphericalSolver solver(mu);
    SphericalFunction phi = solver.solve(label);
    Json grid = Json::array();
    const int steps = 8;
    std::vector<int> idx(g.n, 0);
    while (true) {
      std::vector<double> t(g.n);
      for (int k = 0; k < g.n; ++k) t[k] = (idx[k] + 0.5) * (1.5707963267948966 / steps);
      Json row;
      row["t"] = t;
      Json vals = Json::array();
      for (auto& e : phi.entries.entries) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", e.evalAt(t).real());
        vals.push_back(std::string(buf));
      }
      row["entries"] = std::move(vals);
      grid.push_back(std::move(row));
      int k = 0;
      while (k < g.n && ++idx[k] == steps) idx[k++] = 0;
      if (k == g.n) break;
    }
    out["samples"] = std::move(grid);
  }
  emit(out, o.format);
  return 0;
}

int runZonal(const CommonOpts& o, int i) {
  RankPair g(o.n, o.m);
  ZonalForm z = zonalPhi(g, i);
  Json out;
  out["i"] = i;
  out["eigenvalue"] = ratStr(Rational(2 * i * (o.m + o.n - i + 1)));
  Json coeffs = Json::array();
  for (auto& c : z.coeffs) coeffs.push_back(ratStr(c));
  out["psi_coefficients"] = std::move(coeffs);
  out["function"] = toJson(z.func);
  emit(out, o.format);
  return 0;
}

int runCasimirCheck(const CommonOpts& o) {
  RankPair g(o.n, o.m);
  MuSpec mu = parseMu(g, o.mu);
  if (mu.isRankOne())
    throw CLI::ValidationError("casimir-check runs on the wedge family (mu = omega_s + b omega_n)");
  RadialOperator R(mu);
  bool ok = true;
  Json rungs = Json::array();
  for (int i = 0; i <= g.n - mu.p1; ++i) {
    MTypeBasis basis = MTypeBasis::build(mu);
    DiagFunc qi = DiagFunc::zeros(basis.dim(), g.n);
    for (int l = 0; l < basis.dim(); ++l) qi.entries[l] = qLadderEntry(mu, i, basis.labels[l]);
    Weight nui = Weight::fundamental(g.N(), mu.p1 + i) + Weight::fundamental(g.N(), g.N() - i) +
                 Weight::fundamental(g.N(), g.n) * mu.b;
    DiagFunc rhs = qi.scaled(GaussRational(casimirEigenvalue(nui)));
    if (i >= 1) {
      DiagFunc qprev = DiagFunc::zeros(basis.dim(), g.n);
      for (int l = 0; l < basis.dim(); ++l)
        qprev.entries[l] = qLadderEntry(mu, i - 1, basis.labels[l]);
      Rational c = Rational(-2 * (g.n - mu.p1 - i + 1)) * Rational(mu.b + g.n - mu.p1 - i + 1);
      rhs += qprev.scaled(GaussRational(c));
    }
    bool pass = R.apply(qi) == rhs;
    ok = ok && pass;
    Json e;
    e["rung"] = i;
    e["eigenvalue"] = ratStr(casimirEigenvalue(nui));
    e["pass"] = pass;
    rungs.push_back(std::move(e));
  }
  Json out;
  out["mu"] = mu.str();
  out["rungs"] = std::move(rungs);
  out["pass"] = ok;
  emit(out, o.format);
  return ok ? 0 : 1;
}

int runOrthogonality(const CommonOpts& o, int degree, bool withFloat) {
  RankPair g(o.n, o.m);
  MuSpec mu = parseMu(g, o.mu);
  GramReport rep = schurGram(mu, degree, withFloat);
  Json out;
  out["mu"] = mu.str();
  Json labels = Json::array();
  for (auto& l : rep.labels) labels.push_back(toJson(l));
  out["labels"] = std::move(labels);
  Json gram = Json::array();
  for (auto& row : rep.gram) {
    Json r = Json::array();
    for (auto& x : row) r.push_back(ratStr(x));
    gram.push_back(std::move(r));
  }
  out["gram"] = std::move(gram);
  Json expected = Json::array();
  for (auto& x : rep.expected) expected.push_back(ratStr(x));
  out["expected_diagonal"] = std::move(expected);
  out["diagonal_matches"] = rep.diagonalMatches;
  if (withFloat) {
    out["float_max_rel_error"] = rep.maxFloatRelError;
    out["float_max_cross_term"] = rep.maxFloatCrossError;
  }
  emit(out, o.format);
  return rep.diagonalMatches ? 0 : 1;
}

int runBranch(const CommonOpts& o, const std::string& lambdaArg) {
  RankPair g(o.n, o.m);
  MuSpec mu = parseMu(g, o.mu);
  std::vector<long> a;
  {
    std::stringstream ss(lambdaArg);
    std::string tok;
    while (std::getline(ss, tok, ',')) a.push_back(std::stol(tok));
  }
  if ((int)a.size() != g.N() - 1)
    throw CLI::ValidationError("--lambda expects " + std::to_string(g.N() - 1) +
                               " comma-separated coefficients");
  Weight lambda(g.N(), a);
  Json out;
  out["lambda"] = toJson(lambda);
  out["dim"] = weylDim(lambda).get_str();
  out["mu"] = mu.str();
  out["multiplicity"] = branchMultiplicity(g, lambda, mu);
  Json table = Json::array();
  for (auto& [ktype, m] : kTypeDecomposition(g, lambda)) {
    Json e;
    e["ktype"] = ktype;
    e["multiplicity"] = m;
    table.push_back(std::move(e));
  }
  out["ktypes"] = std::move(table);
  emit(out, o.format);
  return 0;
}

int runSelftest(const CommonOpts& o, const std::string& reportPath) {
  auto results = runAcceptance([](const CriterionResult& r) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
              << " -- " << r.detail << "\n"
              << std::flush;
  });
  Json rep = acceptanceReport(results);
  if (!reportPath.empty()) {
    std::ofstream out(reportPath);
    out << rep.dump(1) << "\n";
  }
  bool all = rep["all_pass"].get<bool>();
  std::cout << (all ? "selftest: all criteria passed" : "selftest: FAILURES present") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matrix spherical functions for SU(n+m) / S(U(n) x U(m))"};
  app.require_subcommand(1);

  CommonOpts o;
  int degree = 0, bottomIndex = 0, zonalI = 1;
  bool withFloat = false, emitSamples = false;
  std::string degreesArg, lambdaArg, reportPath;

  auto* bottom = app.add_subcommand("bottom", "spectrum labels up to a degree bound");
  addCommon(bottom, o);
  bottom->add_option("--degree", degree, "spherical degree bound");

  auto* spherical = app.add_subcommand("spherical", "solve one spherical function");
  addCommon(spherical, o);
  spherical->add_option("--bottom", bottomIndex, "bottom element index (deterministic order)");
  spherical->add_option("--degrees", degreesArg, "comma-separated d_1..d_n");
  spherical->add_flag("--emit-samples", emitSamples, "append an evaluation grid");

  auto* zonal = app.add_subcommand("zonal", "zonal spherical function closed form");
  addCommon(zonal, o);
  zonal->add_option("--i", zonalI, "index of the spherical generator");

  auto* casimir = app.add_subcommand("casimir-check", "ladder recurrence for one K-type");
  addCommon(casimir, o);

  auto* orth = app.add_subcommand("orthogonality", "Gram matrix against the Schur values");
  addCommon(orth, o);
  orth->add_option("--degree", degree, "spherical degree bound");
  orth->add_flag("--float", withFloat, "include the quadrature cross-check");

  auto* branch = app.add_subcommand("branch", "branching multiplicity from the oracle");
  addCommon(branch, o);
  branch->add_option("--lambda", lambdaArg, "G highest weight coefficients")->required();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--report", reportPath, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bottom->parsed()) return runBottom(o, degree);
    if (spherical->parsed()) return runSpherical(o, bottomIndex, degreesArg, emitSamples);
    if (zonal->parsed()) return runZonal(o, zonalI);
    if (casimir->parsed()) return runCasimirCheck(o);
    if (orth->parsed()) return runOrthogonality(o, degree, withFloat);
    if (branch->parsed()) return runBranch(o, lambdaArg);
    if (selftest->parsed()) return runSelftest(o, reportPath);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
