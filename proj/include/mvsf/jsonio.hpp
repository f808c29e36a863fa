#pragma once

#include <json.hpp>

#include "mvsf/casimir.hpp"
#include "mvsf/spherical.hpp"

namespace mvsf {

using Json = nlohmann::ordered_json;

// Rationals serialize as exact strings, Gaussian rationals as {re, im}.
Json toJson(const Rational& r);
Rational rationalFromJson(const Json& j);
Json toJson(const GaussRational& c);
GaussRational gaussFromJson(const Json& j);

// Weights as arrays of fundamental-weight coefficients.
Json toJson(const Weight& w);
Weight weightFromJson(int N, const Json& j);

// Sparse term list sorted by exponent vector.
Json toJson(const TrigPoly& p);
TrigPoly trigFromJson(const Json& j);

Json toJson(const DiagFunc& f);
DiagFunc diagFromJson(const Json& j);

Json toJson(const SpectrumLabel& l);

// Entries rendered as cosine polynomials when possible, with the raw
// term list as a fallback.
Json sphericalToJson(const MuSpec& mu, const SphericalFunction& phi);

}  // namespace mvsf
