#include "mvsf/jsonio.hpp"

namespace mvsf {

Json toJson(const Rational& r) { return ratStr(r); }

Rational rationalFromJson(const Json& j) { return ratFromStr(j.get<std::string>()); }

Json toJson(const GaussRational& c) {
  Json j;
  j["re"] = ratStr(c.re);
  j["im"] = ratStr(c.im);
  return j;
}

GaussRational gaussFromJson(const Json& j) {
  return GaussRational(ratFromStr(j.at("re").get<std::string>()),
                       ratFromStr(j.at("im").get<std::string>()));
}

Json toJson(const Weight& w) {
  Json j = Json::array();
  for (long a : w.omega()) j.push_back(a);
  return j;
}

Weight weightFromJson(int N, const Json& j) {
  std::vector<long> a;
  for (auto& x : j) a.push_back(x.get<long>());
  if ((int)a.size() != N - 1) throw std::invalid_argument("weightFromJson: size");
  return Weight(N, std::move(a));
}

Json toJson(const TrigPoly& p) {
  Json j;
  j["n"] = p.nvars();
  Json terms = Json::array();
  for (auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["re"] = ratStr(c.re);
    t["im"] = ratStr(c.im);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

TrigPoly trigFromJson(const Json& j) {
  int n = j.at("n").get<int>();
  TrigPoly p(n);
  for (auto& t : j.at("terms")) {
    std::vector<int> e = t.at("exp").get<std::vector<int>>();
    GaussRational c(ratFromStr(t.at("re").get<std::string>()),
                    ratFromStr(t.at("im").get<std::string>()));
    p += TrigPoly::monomial(n, e, c);
  }
  return p;
}

Json toJson(const DiagFunc& f) {
  Json j = Json::array();
  for (auto& e : f.entries) j.push_back(toJson(e));
  return j;
}

DiagFunc diagFromJson(const Json& j) {
  DiagFunc f;
  for (auto& e : j) f.entries.push_back(trigFromJson(e));
  return f;
}

Json toJson(const SpectrumLabel& l) {
  Json j;
  j["bottom"] = toJson(l.bottom.weight);
  j["degrees"] = l.degrees;
  return j;
}

Json sphericalToJson(const MuSpec& mu, const SphericalFunction& phi) {
  Json j;
  j["mu"] = mu.str();
  j["weight"] = toJson(phi.label.total);
  j["label"] = toJson(phi.label);
  j["eigenvalue"] = ratStr(phi.eigenvalue);

  MTypeBasis basis = MTypeBasis::build(mu);
  Json entries = Json::array();
  for (int i = 0; i < phi.entries.dim(); ++i) {
    Json e;
    e["mtype"] = basis.labels[i];
    try {
      CosPoly cp = phi.entries.entries[i].toCos();
      Json terms = Json::array();
      for (auto& [ex, c] : cp.terms()) {
        Json t;
        t["cos_exp"] = ex;
        t["coeff"] = ratStr(c);
        terms.push_back(std::move(t));
      }
      e["cos_terms"] = std::move(terms);
    } catch (const NotCosPolynomialError&) {
      e["terms"] = toJson(phi.entries.entries[i])["terms"];
    }
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);

  Json exp = Json::array();
  for (std::size_t k = 0; k < phi.span.size(); ++k) {
    Json t;
    t["label"] = toJson(phi.span[k]);
    t["coeff"] = toJson(phi.expansion[k]);
    exp.push_back(std::move(t));
  }
  j["expansion"] = std::move(exp);
  return j;
}

}  // namespace mvsf
