#include "stringcone/io.hpp"

#include "stringcone/errors.hpp"

namespace stringcone {

namespace {

long long fitOrThrow(const Int& z, const std::string& where) {
  if (!z.fits_slong_p()) throw ParseError(where + ": integer out of range");
  return z.get_si();
}

IntVector parseIntVector(const Json& j, int expectedLength, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (expectedLength >= 0 && static_cast<int>(j.size()) != expectedLength)
    throw ParseError(where + ": expected " + std::to_string(expectedLength) + " entries");
  IntVector v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(parseInt(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RatVector parseRatVector(const Json& j, int expectedLength, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (expectedLength >= 0 && static_cast<int>(j.size()) != expectedLength)
    throw ParseError(where + ": expected " + std::to_string(expectedLength) + " entries");
  RatVector v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(parseRational(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

}  // namespace

Int parseInt(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    return Int(static_cast<long>(v));
  }
  if (j.is_string()) {
    try {
      Rational r = Rational::fromString(j.get<std::string>());
      if (!r.isInteger()) throw ParseError(where + ": expected an integer");
      return r.numerator();
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or integer string");
}

Rational parseRational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Int(static_cast<long>(j.get<long long>())));
  if (j.is_string()) {
    try {
      return Rational::fromString(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

GradedCone parseCone(const Json& doc) {
  if (!doc.is_object()) throw ParseError("cone: expected an object");
  if (!doc.contains("rank")) throw ParseError("cone: missing \"rank\"");
  GradedCone cone;
  cone.rank = static_cast<int>(fitOrThrow(parseInt(doc.at("rank"), "rank"), "rank"));
  if (cone.rank < 0) throw ParseError("rank: must be nonnegative");

  for (const char* key : {"rayGenerators", "degree", "points"})
    if (!doc.contains(key)) throw ParseError(std::string("cone: missing \"") + key + "\"");

  const Json& rays = doc.at("rayGenerators");
  if (!rays.is_array()) throw ParseError("rayGenerators: expected an array");
  for (size_t i = 0; i < rays.size(); ++i)
    cone.rayGenerators.push_back(
        parseIntVector(rays[i], cone.rank, "rayGenerators[" + std::to_string(i) + "]"));

  cone.degree = parseIntVector(doc.at("degree"), cone.rank, "degree");

  const Json& pts = doc.at("points");
  if (!pts.is_array()) throw ParseError("points: expected an array");
  for (size_t i = 0; i < pts.size(); ++i)
    cone.points.push_back(
        parseIntVector(pts[i], cone.rank, "points[" + std::to_string(i) + "]"));
  return cone;
}

void applyDocumentOverrides(const Json& doc, SessionOptions& options) {
  if (doc.contains("seed"))
    options.seed = static_cast<std::uint64_t>(
        fitOrThrow(parseInt(doc.at("seed"), "seed"), "seed"));
  if (doc.contains("heights"))
    options.heights = parseRatVector(doc.at("heights"), -1, "heights");
  if (doc.contains("xi")) options.xi = parseRatVector(doc.at("xi"), -1, "xi");
  if (doc.contains("coefficients"))
    options.coefficients = parseRatVector(doc.at("coefficients"), -1, "coefficients");
}

std::vector<StratumRecord> parseStrata(const Json& doc) {
  if (!doc.is_object() || !doc.contains("strata"))
    throw ParseError("strata document: missing \"strata\"");
  const Json& arr = doc.at("strata");
  if (!arr.is_array()) throw ParseError("strata: expected an array");

  std::vector<StratumRecord> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "strata[" + std::to_string(i) + "]";
    const Json& s = arr[i];
    if (!s.is_object() || !s.contains("ePolynomial") || !s.contains("cone"))
      throw ParseError(where + ": expected {\"ePolynomial\", \"cone\"}");

    StratumRecord rec;
    const Json& terms = s.at("ePolynomial");
    if (!terms.is_array()) throw ParseError(where + ".ePolynomial: expected an array");
    for (size_t t = 0; t < terms.size(); ++t) {
      const Json& term = terms[t];
      const std::string tw = where + ".ePolynomial[" + std::to_string(t) + "]";
      if (!term.is_array() || term.size() != 3)
        throw ParseError(tw + ": expected [p, q, coefficient]");
      long long p = fitOrThrow(parseInt(term[0], tw), tw);
      long long q = fitOrThrow(parseInt(term[1], tw), tw);
      rec.ePolynomial.add(p, q, parseInt(term[2], tw));
    }

    const Json& coneDoc = s.at("cone");
    if (coneDoc.is_string() && coneDoc.get<std::string>() == "smooth") {
      rec.localCone = std::nullopt;
    } else {
      rec.localCone = parseCone(coneDoc);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

Json toJson(const Rational& r) { return r.toString(); }

Json toJson(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(toJson(x));
  return a;
}

Json toJson(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

Json toJson(const GradedPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p())
      a.push_back(c.get_si());
    else
      a.push_back(c.get_str());
  }
  return a;
}

Json toJson(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).toString());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json toJson(const BivariatePolynomial& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term = Json::array();
    term.push_back(e.first);
    term.push_back(e.second);
    if (c.fits_slong_p())
      term.push_back(c.get_si());
    else
      term.push_back(c.get_str());
    a.push_back(std::move(term));
  }
  return a;
}

Json toJson(const ValidationReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["failures"] = rep.failures;
  return j;
}

Json toJson(const PartitionReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["domainSize"] = rep.domainSize;
  j["problems"] = rep.problems;
  return j;
}

Json toJson(const RegularityReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  if (rep.firstFailure) {
    j["firstFailure"] = {{"prefix", rep.firstFailure->first},
                         {"degree", rep.firstFailure->second}};
  }
  return j;
}

Json toJson(const NondegeneracyReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  Json shapes = Json::array();
  for (const auto& [size, rk] : rep.shapes)
    shapes.push_back({{"size", size}, {"rank", rk}});
  j["matrices"] = std::move(shapes);
  j["problems"] = rep.problems;
  return j;
}

}  // namespace stringcone
