#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "stringcone/pairing.hpp"
#include "stringcone/pipeline.hpp"
#include "stringcone/stringy.hpp"

namespace stringcone {

using Json = nlohmann::ordered_json;

/// Parses "p/q" strings or JSON integers; throws ParseError otherwise.
Rational parseRational(const Json& j, const std::string& where);
Int parseInt(const Json& j, const std::string& where);

/// Cone document: rank, rayGenerators, degree, points, and optional
/// overrides (heights, xi, coefficients, seed).
GradedCone parseCone(const Json& doc);

/// Reads the optional randomized-stage overrides out of a cone document.
void applyDocumentOverrides(const Json& doc, SessionOptions& options);

/// Strata document: {"strata": [{"ePolynomial": [[p,q,c],...],
/// "cone": "smooth" | <cone document>}, ...]}.
std::vector<StratumRecord> parseStrata(const Json& doc);

Json toJson(const Rational& r);
Json toJson(const RatVector& v);
Json toJson(const IntVector& v);
Json toJson(const GradedPolynomial& p);
Json toJson(const RatMatrix& m);  // row-major rational strings
Json toJson(const BivariatePolynomial& p);
Json toJson(const ValidationReport& rep);
Json toJson(const PartitionReport& rep);
Json toJson(const RegularityReport& rep);
Json toJson(const NondegeneracyReport& rep);

}  // namespace stringcone
