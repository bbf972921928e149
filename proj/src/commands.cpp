#include "stringcone/commands.hpp"

#include <functional>
#include <sstream>

#include "stringcone/errors.hpp"

namespace stringcone {

namespace {

Json indices1Based(const std::vector<int>& idx) {
  Json a = Json::array();
  for (int i : idx) a.push_back(i + 1);
  return a;
}

Json heightsEcho(ConeSession& session, const SessionOptions& options) {
  Json j;
  j["values"] = toJson(session.triangulation().heights().values);
  j["given"] = options.heights.has_value();
  j["retries"] = session.heightRetriesUsed();
  return j;
}

Json xiEcho(ConeSession& session, const SessionOptions& options) {
  Json j;
  j["value"] = toJson(session.direction().xi);
  j["given"] = options.xi.has_value();
  j["retries"] = session.direction().retries;
  return j;
}

Json coefficientsEcho(ConeSession& session, const SessionOptions& options) {
  Json j;
  j["values"] = toJson(session.forms()[0].coefficients);
  j["given"] = options.coefficients.has_value();
  j["qMode"] = options.qMode ? Json(options.qMode->toString()) : Json(nullptr);
  j["retries"] = session.coefficientRetriesUsed();
  return j;
}

Json simplicesJson(const Triangulation& tri) {
  Json a = Json::array();
  for (const auto& sx : tri.simplices()) {
    Json s;
    s["indices"] = indices1Based(sx.indices);
    s["functional"] = toJson(sx.functional);
    s["latticeIndex"] = sx.latticeIndex.get_str();
    a.push_back(std::move(s));
  }
  return a;
}

Json boxesJson(const Triangulation& tri, const std::vector<BoxSet>& boxes) {
  Json a = Json::array();
  for (const auto& box : boxes) {
    Json b;
    b["simplex"] = indices1Based(tri.simplex(box.simplexIndex).indices);
    Json pts = Json::array();
    for (const auto& bp : box.points) {
      Json p;
      p["coords"] = toJson(bp.point.coords);
      p["degree"] = bp.point.degree;
      p["gamma"] = toJson(bp.gamma);
      pts.push_back(std::move(p));
    }
    b["points"] = std::move(pts);
    a.push_back(std::move(b));
  }
  return a;
}

Json dimsJson(const DimensionTable& table) {
  Json a = Json::array();
  for (const auto& row : table.dims) a.push_back(row);
  return a;
}

SessionOptions makeOptions(const Json& input, const CliOverrides& overrides) {
  SessionOptions options;
  applyDocumentOverrides(input, options);
  if (overrides.seed) options.seed = *overrides.seed;
  if (overrides.degreeCap) options.degreeCap = *overrides.degreeCap;
  if (overrides.qMode) options.qMode = *overrides.qMode;
  return options;
}

Sign parseSign(const Json& input) {
  if (!input.contains("sign")) return Sign::PlusXi;
  std::string s = input.at("sign").is_string() ? input.at("sign").get<std::string>() : "";
  if (s == "+" || s == "+xi") return Sign::PlusXi;
  if (s == "-" || s == "-xi") return Sign::MinusXi;
  throw ParseError("sign: expected \"+\" or \"-\"");
}

using Handler = std::function<void(ConeSession&, const SessionOptions&, const Json&, Json&)>;

void handleValidate(ConeSession& session, const SessionOptions&, const Json&, Json& out) {
  out["validation"] = toJson(session.validation());
  if (!session.validation().ok) throw InvalidCone("validation failed");
}

void handleTriangulate(ConeSession& session, const SessionOptions& options, const Json&,
                       Json& out) {
  out["validation"] = toJson(session.validation());
  const Triangulation& tri = session.triangulation();
  out["heights"] = heightsEcho(session, options);
  out["simplices"] = simplicesJson(tri);
}

void handleDecompose(ConeSession& session, const SessionOptions& options,
                     const Json& input, Json& out) {
  const Triangulation& tri = session.triangulation();
  out["heights"] = heightsEcho(session, options);
  out["xi"] = xiEcho(session, options);
  Json betas = Json::array();
  for (size_t s = 0; s < tri.simplices().size(); ++s) {
    Json b;
    b["simplex"] = indices1Based(tri.simplex(static_cast<int>(s)).indices);
    b["betas"] = toJson(session.direction().betas[s]);
    betas.push_back(std::move(b));
  }
  out["xiCoordinates"] = std::move(betas);
  out["boxes"] = {{"plus", boxesJson(tri, session.boxes().plus)},
                  {"minus", boxesJson(tri, session.boxes().minus)}};

  if (input.contains("point")) {
    IntVector n;
    for (size_t i = 0; i < input.at("point").size(); ++i)
      n.push_back(parseInt(input.at("point")[i], "point"));
    if (static_cast<int>(n.size()) != session.cone().rank)
      throw ParseError("point: wrong length");
    Sign sign = parseSign(input);
    auto dec = decomposePoint(tri, session.direction(), n, sign);
    Json d;
    d["sign"] = signName(sign);
    d["simplex"] = indices1Based(tri.simplex(dec.simplexIndex).indices);
    d["base"] = toJson(dec.base.coords);
    d["baseDegree"] = dec.base.degree;
    d["multiplicities"] = toJson(dec.multiplicities);
    out["pointDecomposition"] = std::move(d);
  }
}

void handleSeries(ConeSession& session, const SessionOptions& options, const Json&,
                  Json& out) {
  session.triangulation();
  out["heights"] = heightsEcho(session, options);
  out["xi"] = xiEcho(session, options);
  out["S"] = toJson(session.sPoly());
  out["T"] = toJson(session.tPoly());
  bool duality = checkDuality(session.sPoly(), session.tPoly(), session.cone().rank);
  out["duality"] = duality;
  long long cap = session.degreeCap();
  bool sOracle =
      session.sPoly() == hilbertNumeratorTruncated(session.triangulation(), cap, false);
  bool tOracle =
      session.tPoly() == hilbertNumeratorTruncated(session.triangulation(), cap, true);
  out["hilbertOracle"] = {{"degreeCap", cap}, {"S", sOracle}, {"T", tOracle}};
  if (!duality || !sOracle || !tOracle)
    throw Error("series checks failed (duality or counting oracle)");
}

void handleQuotient(ConeSession& session, const SessionOptions& options, const Json&,
                    Json& out) {
  const auto& ring = session.ringQuotient();
  const auto& interior = session.interiorQuotient();
  out["heights"] = heightsEcho(session, options);
  out["xi"] = xiEcho(session, options);
  out["coefficients"] = coefficientsEcho(session, options);
  out["degreeCap"] = session.degreeCap();

  auto regRing = regularityCheck(ring.dimensions(), session.cone().rank, session.degreeCap());
  auto regInterior =
      regularityCheck(interior.dimensions(), session.cone().rank, session.degreeCap());
  out["ring"] = {{"dimensions", dimsJson(ring.dimensions())},
                 {"certified", ring.certified()},
                 {"regularity", toJson(regRing)}};
  out["interior"] = {{"dimensions", dimsJson(interior.dimensions())},
                     {"certified", interior.certified()},
                     {"regularity", toJson(regInterior)}};
  if (!regRing.ok || !regInterior.ok) throw Error("regularity check failed");
}

void handlePairing(ConeSession& session, const SessionOptions& options, const Json&,
                   Json& out) {
  const PairingData& pd = session.pairing();
  out["heights"] = heightsEcho(session, options);
  out["xi"] = xiEcho(session, options);
  out["coefficients"] = coefficientsEcho(session, options);
  out["socle"] = toJson(pd.soclePoint);
  Json ms = Json::array();
  for (const auto& m : pd.matrices) ms.push_back(toJson(m));
  out["matrices"] = std::move(ms);
  out["nondegeneracy"] = toJson(session.nondegeneracy());
  if (!session.nondegeneracy().ok) throw Error("pairing is degenerate");
}

void handleCertify(ConeSession& session, const SessionOptions& options, const Json&,
                   Json& out) {
  Json stages;
  stages["validate"] = toJson(session.validation());
  if (!session.validation().ok) {
    out["stages"] = std::move(stages);
    throw InvalidCone("validation failed");
  }

  const Triangulation& tri = session.triangulation();
  out["heights"] = heightsEcho(session, options);
  stages["triangulation"] = {{"simplices", simplicesJson(tri)}};

  out["xi"] = xiEcho(session, options);
  const auto& boxes = session.boxes();
  bool boxSizes = true;
  for (size_t s = 0; s < tri.simplices().size(); ++s) {
    Int idx = tri.simplex(static_cast<int>(s)).latticeIndex;
    if (Int(static_cast<long>(boxes.plus[s].points.size())) != idx) boxSizes = false;
    if (Int(static_cast<long>(boxes.minus[s].points.size())) != idx) boxSizes = false;
  }
  stages["boxes"] = {{"plus", boxesJson(tri, boxes.plus)},
                     {"minus", boxesJson(tri, boxes.minus)},
                     {"sizesMatchLatticeIndex", boxSizes}};
  if (!boxSizes) {
    out["stages"] = std::move(stages);
    throw Error("box set sizes do not match lattice indices");
  }

  long long cap = session.degreeCap();
  auto partPlus = verifyPartition(tri, session.direction(), cap, Sign::PlusXi);
  auto partMinus = verifyPartition(tri, session.direction(), cap, Sign::MinusXi);
  stages["partition"] = {{"degreeCap", cap},
                         {"plus", toJson(partPlus)},
                         {"minus", toJson(partMinus)}};
  if (!partPlus.ok || !partMinus.ok) {
    out["stages"] = std::move(stages);
    throw Error("partition check failed");
  }

  bool duality = checkDuality(session.sPoly(), session.tPoly(), session.cone().rank);
  bool sOracle = session.sPoly() == hilbertNumeratorTruncated(tri, cap, false);
  bool tOracle = session.tPoly() == hilbertNumeratorTruncated(tri, cap, true);
  stages["series"] = {{"S", toJson(session.sPoly())},
                      {"T", toJson(session.tPoly())},
                      {"duality", duality},
                      {"hilbertOracle", {{"S", sOracle}, {"T", tOracle}}}};
  if (!duality || !sOracle || !tOracle) {
    out["stages"] = std::move(stages);
    throw Error("series checks failed (duality or counting oracle)");
  }

  const auto& ring = session.ringQuotient();
  const auto& interior = session.interiorQuotient();
  out["coefficients"] = coefficientsEcho(session, options);
  auto regRing = regularityCheck(ring.dimensions(), session.cone().rank, cap);
  auto regInterior = regularityCheck(interior.dimensions(), session.cone().rank, cap);
  stages["quotient"] = {{"ring",
                         {{"dimensions", dimsJson(ring.dimensions())},
                          {"certified", ring.certified()},
                          {"regularity", toJson(regRing)}}},
                        {"interior",
                         {{"dimensions", dimsJson(interior.dimensions())},
                          {"certified", interior.certified()},
                          {"regularity", toJson(regInterior)}}}};
  if (!regRing.ok || !regInterior.ok) {
    out["stages"] = std::move(stages);
    throw Error("regularity check failed");
  }

  stages["pairing"] = {{"socle", toJson(session.pairing().soclePoint)},
                       {"nondegeneracy", toJson(session.nondegeneracy())}};
  out["stages"] = std::move(stages);
  if (!session.nondegeneracy().ok) throw Error("pairing is degenerate");
}

CommandResult runConeCommand(const std::string& command, const Json& input,
                             const CliOverrides& overrides, const Handler& handler) {
  Json out;
  out["command"] = command;
  SessionOptions options = makeOptions(input, overrides);
  out["seed"] = options.seed;
  ConeSession session(parseCone(input), options);
  out["degreeCap"] = session.degreeCap();
  try {
    handler(session, options, input, out);
    out["ok"] = true;
    return {0, std::move(out)};
  } catch (const ParseError&) {
    throw;  // malformed input, not an invariant failure
  } catch (const Error& e) {
    out["ok"] = false;
    out["error"] = {{"type", "invariant"}, {"message", e.what()}, {"seed", options.seed}};
    return {1, std::move(out)};
  }
}

CommandResult runStringy(const Json& input, const CliOverrides& overrides) {
  Json out;
  out["command"] = "stringy";
  StringyOptions options;
  if (input.contains("seed"))
    options.seed = static_cast<std::uint64_t>(parseInt(input.at("seed"), "seed").get_si());
  if (overrides.seed) options.seed = *overrides.seed;
  if (overrides.degreeCap) options.degreeCap = *overrides.degreeCap;
  out["seed"] = options.seed;

  auto strata = parseStrata(input);
  try {
    Json perStratum = Json::array();
    for (size_t i = 0; i < strata.size(); ++i) {
      Json s;
      s["ePolynomial"] = toJson(strata[i].ePolynomial);
      s["smooth"] = !strata[i].localCone || strata[i].localCone->rank == 0;
      s["S"] = toJson(stratumSPolynomial(strata[i], static_cast<int>(i), options));
      perStratum.push_back(std::move(s));
    }
    BivariatePolynomial e = stringEPolynomial(strata, options);
    out["strata"] = std::move(perStratum);
    out["stringE"] = toJson(e);
    Json hodge = Json::array();
    for (const auto& [exp, h] : stringHodgeNumbers(e)) {
      Json term = Json::array();
      term.push_back(exp.first);
      term.push_back(exp.second);
      term.push_back(h.fits_slong_p() ? Json(h.get_si()) : Json(h.get_str()));
      hodge.push_back(std::move(term));
    }
    out["hodgeNumbers"] = std::move(hodge);
    out["ok"] = true;
    return {0, std::move(out)};
  } catch (const Error& e) {
    out["ok"] = false;
    out["error"] = {{"type", "invariant"}, {"message", e.what()}, {"seed", options.seed}};
    return {1, std::move(out)};
  }
}

}  // namespace

CommandResult runCommand(const std::string& command, const Json& input,
                         const CliOverrides& overrides) {
  try {
    if (command == "validate") return runConeCommand(command, input, overrides, handleValidate);
    if (command == "triangulate")
      return runConeCommand(command, input, overrides, handleTriangulate);
    if (command == "decompose")
      return runConeCommand(command, input, overrides, handleDecompose);
    if (command == "series") return runConeCommand(command, input, overrides, handleSeries);
    if (command == "quotient")
      return runConeCommand(command, input, overrides, handleQuotient);
    if (command == "pairing") return runConeCommand(command, input, overrides, handlePairing);
    if (command == "certify") return runConeCommand(command, input, overrides, handleCertify);
    if (command == "stringy") return runStringy(input, overrides);
    Json out;
    out["error"] = {{"type", "usage"}, {"message", "unknown command '" + command + "'"}};
    return {2, std::move(out)};
  } catch (const ParseError& e) {
    Json out;
    out["command"] = command;
    out["ok"] = false;
    out["error"] = {{"type", "parse"}, {"message", e.what()}};
    return {2, std::move(out)};
  } catch (const std::invalid_argument& e) {
    Json out;
    out["command"] = command;
    out["ok"] = false;
    out["error"] = {{"type", "parse"}, {"message", e.what()}};
    return {2, std::move(out)};
  }
}

namespace {

void renderInto(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      renderInto(value, path, os);
    }
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (size_t i = 0; i < j.size(); ++i)
      renderInto(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string renderText(const Json& output) {
  std::ostringstream os;
  renderInto(output, "", os);
  return os.str();
}

}  // namespace stringcone
